use vsn_kcover::harness::{read_csv, run_sweep, summarize, write_rows, ExperimentConfig, RowFormat, SolverKind};
use vsn_kcover::prelude::*;

fn config() -> ExperimentConfig {
    let mut c = ExperimentConfig::desk_targets(2, (1..=4).collect());
    c.axis = SweepAxis::VaryTargets {
        n: 5,
        m_list: vec![3, 6, 9],
    };
    c
}

fn csv_bytes(rows: &[ResultRow]) -> Vec<u8> {
    let mut buf = Vec::new();
    write_rows(rows, RowFormat::Csv, false, &mut buf).unwrap();
    buf
}

#[test]
fn reruns_are_byte_identical() {
    let a = csv_bytes(&run_sweep(&config()).unwrap());
    let b = csv_bytes(&run_sweep(&config()).unwrap());
    assert_eq!(a, b);
}

#[test]
fn csv_round_trips() {
    let rows = run_sweep(&config()).unwrap();
    let bytes = csv_bytes(&rows);
    let back = read_csv(bytes.as_slice()).unwrap();
    assert_eq!(back.len(), rows.len());
    assert_eq!(csv_bytes(&back), bytes);
}

#[test]
fn histograms_partition_the_targets() {
    let rows = run_sweep(&config()).unwrap();
    assert_eq!(rows.len(), 4 * 3 * SolverKind::ALL.len());
    for r in &rows {
        assert_eq!(r.histogram.iter().sum::<usize>(), r.m);
        assert_eq!(r.histogram.len(), r.k as usize + 1);
        assert!(r.active_sensors <= r.n);
        if r.solver.is_exact() {
            assert!(r.optimal);
        }
    }
}

#[test]
fn jsonl_rows_parse_back() {
    let rows = run_sweep(&config()).unwrap();
    let mut buf = Vec::new();
    write_rows(&rows, RowFormat::JsonLines, false, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    for (line, row) in text.lines().zip(&rows) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["solver"], row.solver.to_string());
        assert_eq!(v["m"], row.m);
        assert!(v.get("wall_time_ms").is_none());
    }
}

#[test]
fn summary_averages_over_seeds() {
    let rows = run_sweep(&config()).unwrap();
    let summary = summarize(&rows);
    assert_eq!(summary.len(), 3 * SolverKind::ALL.len());
    for s in &summary {
        assert_eq!(s.seeds, 4);
        let mean = rows
            .iter()
            .filter(|r| r.m == s.m && r.solver == s.solver)
            .map(|r| r.balancing_index)
            .sum::<f64>()
            / 4.0;
        assert!((mean - s.mean_balancing_index).abs() < 1e-12);
    }
}
