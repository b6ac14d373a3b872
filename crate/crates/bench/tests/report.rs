use lzx_bench::{render_csv, render_table, run_bench, BenchConfig, Subject};
use lzx_core::envelope::Mode;

fn small_config() -> BenchConfig {
    BenchConfig {
        sizes: vec![2048, 4096],
        modes: vec![Mode::Strong, Mode::Fast],
        workers: vec![1, 2],
        repetitions: 3,
        strong_n_it: 100,
        fast_n_it: 50,
        chunk_size: 1024,
    }
}

#[test]
fn report_shape_and_positivity() {
    let cfg = small_config();
    let report = run_bench(&cfg).unwrap();
    let expected = cfg.sizes.len() * (cfg.modes.len() * cfg.workers.len() + 1);
    assert_eq!(report.rows.len(), expected);
    for row in &report.rows {
        assert!(row.median_mbps.is_finite() && row.median_mbps > 0.0);
        assert!(row.min_mbps <= row.median_mbps && row.median_mbps <= row.max_mbps);
    }
    assert!(report.find(Subject::Aes128Ctr, 2048).is_some());
    assert!(report.find(Subject::Lorenz { mode: Mode::Fast, workers: 2 }, 4096).is_some());
}

#[test]
fn rendering_is_ordered_and_complete() {
    let report = run_bench(&small_config()).unwrap();
    let csv = render_csv(&report);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "subject,workers,size_bytes,median_mbps,min_mbps,max_mbps");
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&first[..3], &["strong", "1", "2048"]);
    assert_eq!(csv.lines().count(), report.rows.len() + 1);

    let table = render_table(&report);
    assert_eq!(table.lines().count(), report.rows.len() + 1);
    assert!(table.lines().nth(5).unwrap().starts_with("aes-128-ctr"));
}
