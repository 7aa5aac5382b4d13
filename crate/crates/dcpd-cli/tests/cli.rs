use dcpd::dictionary::project;
use dcpd::io;
use dcpd::matrix::Matrix;
use dcpd::selfdict::HsiMatrix;
use dcpd::solvers::init_random;
use dcpd::tensor::cpd_reconstruct;
use dcpd::{Dictionary, Factors, Selection};
use std::path::Path;
use std::process::{Command, Output};

fn dcpd_bin() -> &'static str {
    env!("CARGO_BIN_EXE_dcpd")
}

fn run(args: &[&str]) -> Output {
    Command::new(dcpd_bin())
        .args(args)
        .env_remove("DCPD_SEED")
        .output()
        .expect("binary runs")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Noiseless DCPD instance written to disk: tensor + unit-norm dictionary.
fn write_instance(dir: &Path, seed: u64) -> (Vec<usize>, usize) {
    let mut atoms = Matrix::from_fn(12, 20, |i, j| {
        ((i * 7 + j * 13 + i * j * 3) % 17) as f64 - 8.0
    });
    atoms.normalize_cols();
    let dict = Dictionary::new(atoms, None).unwrap();
    let indices = vec![2, 9, 15];
    let sel = Selection::new(indices.clone(), vec![1; 3]).unwrap();
    let truth = Factors::new(
        init_random((6, 12, 5), 3, seed).a,
        project(&sel, &dict).unwrap(),
        init_random((6, 12, 5), 3, seed ^ 1).c,
    )
    .unwrap();
    let t = cpd_reconstruct(&truth);
    io::save_tensor(&dir.join("t.bin"), &t).unwrap();
    io::save_dictionary(&dir.join("d.bin"), &dict).unwrap();
    (indices, 3)
}

#[test]
fn decompose_exact_instance() {
    let dir = tempfile::tempdir().unwrap();
    let (indices, rank) = write_instance(dir.path(), 5);
    let out_dir = dir.path().join("out");
    let out = run(&[
        "decompose",
        "--tensor", dir.path().join("t.bin").to_str().unwrap(),
        "--dict", dir.path().join("d.bin").to_str().unwrap(),
        "--solver", "mpals",
        "--rank", &rank.to_string(),
        "--seed", "3",
        "--out", out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("summary.json")).unwrap())
            .unwrap();
    assert!(summary["rel_err"].as_f64().unwrap() < 1e-10);
    assert_eq!(summary["runtime_s"].as_f64().unwrap(), 0.0); // timings off by default
    let sel = io::load_selection(&out_dir.join("selection.json")).unwrap();
    let mut got = sel.indices;
    got.sort_unstable();
    assert_eq!(got, indices);
    // factors round-trip through the repo readers
    let b = io::load_matrix(&out_dir.join("B.bin")).unwrap();
    assert_eq!(b.shape(), (12, 3));
}

#[test]
fn decompose_missing_dictionary_file_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    write_instance(dir.path(), 6);
    let out = run(&[
        "decompose",
        "--tensor", dir.path().join("t.bin").to_str().unwrap(),
        "--dict", dir.path().join("nope.bin").to_str().unwrap(),
        "--solver", "mpals",
        "--rank", "3",
        "--out", dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr_of(&out));
    assert!(!stderr_of(&out).is_empty());
}

#[test]
fn decompose_unknown_solver_lists_names() {
    let dir = tempfile::tempdir().unwrap();
    write_instance(dir.path(), 7);
    let out = run(&[
        "decompose",
        "--tensor", dir.path().join("t.bin").to_str().unwrap(),
        "--dict", dir.path().join("d.bin").to_str().unwrap(),
        "--solver", "bogus",
        "--rank", "3",
        "--out", dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    for name in ["mpals", "smpals", "flex-mpals", "als-fg", "projected-als"] {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn decompose_env_seed_matches_flag_seed() {
    let dir = tempfile::tempdir().unwrap();
    write_instance(dir.path(), 8);
    let base: Vec<String> = [
        "decompose",
        "--tensor", dir.path().join("t.bin").to_str().unwrap(),
        "--dict", dir.path().join("d.bin").to_str().unwrap(),
        "--solver", "smpals",
        "--rank", "3",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();

    let out_flag = dir.path().join("flag");
    let mut args = base.clone();
    args.extend(["--seed".into(), "11".into(), "--out".into(), out_flag.to_str().unwrap().into()]);
    let out = run(&args.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    assert!(out.status.success(), "{}", stderr_of(&out));

    let out_env = dir.path().join("env");
    let mut args = base.clone();
    args.extend(["--out".into(), out_env.to_str().unwrap().into()]);
    let out = Command::new(dcpd_bin())
        .args(args.iter().map(|s| s.as_str()))
        .env("DCPD_SEED", "11")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr_of(&out));

    for f in ["A.bin", "B.bin", "C.bin", "summary.json"] {
        let a = std::fs::read(out_flag.join(f)).unwrap();
        let b = std::fs::read(out_env.join(f)).unwrap();
        assert_eq!(a, b, "{f} differs between --seed and DCPD_SEED");
    }
}

#[test]
fn synth_smoke_and_validation() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "synth",
        "--dims", "5,20,4",
        "--atoms", "30",
        "--classes", "6",
        "--rank", "3",
        "--re", "3",
        "--rho", "",
        "--trials", "2",
        "--sigma", "0.01",
        "--seed", "9",
        "--solvers", "projected-als,mpals",
        "--out", dir.path().join("b").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let csv = std::fs::read_to_string(dir.path().join("b/report.csv")).unwrap();
    assert!(csv.starts_with("grid_param,value,solver,trial,id_rate,rmse_B,rel_err,runtime_s\n"));
    assert_eq!(csv.lines().count(), 1 + 2 * 2); // header + 2 solvers x 2 trials
    assert!(dir.path().join("b/id_rate_vs_re.gp").exists());

    // emitted numeric files round-trip through the crate's own readers
    let records = io::load_report_csv(&dir.path().join("b/report.csv")).unwrap();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r.runtime_s == 0.0)); // timings off
    let report = io::load_report_json(&dir.path().join("b/aggregate.json")).unwrap();
    assert_eq!(report.records.len(), 4);
    let (header, rows) = io::load_table_dat(&dir.path().join("b/id_rate_vs_re.dat")).unwrap();
    assert_eq!(header[0], "value");
    assert!(header.iter().any(|h| h == "oracle"));
    assert_eq!(rows.len(), 1);

    // classes must divide atoms
    let out = run(&[
        "synth",
        "--dims", "5,20,4",
        "--atoms", "30",
        "--classes", "7",
        "--rank", "3",
        "--trials", "1",
        "--out", dir.path().join("c").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unmix_separable_before_after() {
    let dir = tempfile::tempdir().unwrap();
    // separable 40 x 8 data with 3 pure pixels in front
    let spectra = Matrix::from_fn(8, 3, |i, j| ((i * 3 + j * 5) % 7) as f64 * 0.2 + 0.1);
    let mut weights = Matrix::zeros(40, 3);
    for r in 0..3 {
        weights.set(r, r, 1.0);
    }
    for p in 3..40 {
        let w = [(p % 3) as f64 + 0.2, ((p + 1) % 4) as f64 + 0.1, ((p + 2) % 5) as f64 + 0.3];
        let total: f64 = w.iter().sum::<f64>() + 0.5;
        for (r, wv) in w.iter().enumerate() {
            weights.set(p, r, 0.8 * wv / total);
        }
    }
    let hsi = HsiMatrix::new(weights.matmul_t(&spectra), Some((5, 8))).unwrap();
    io::save_hsi(&dir.path().join("img.bin"), &hsi).unwrap();

    let out_dir = dir.path().join("out");
    let out = run(&[
        "unmix",
        "--input", dir.path().join("img.bin").to_str().unwrap(),
        "--rank", "3",
        "--init", "spa",
        "--out", out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("summary.json")).unwrap())
            .unwrap();
    assert!(summary["init_rel_err"].as_f64().unwrap() < 1e-8);
    assert!(summary["rel_err"].as_f64().unwrap() < 1e-8);
    // residual map reshaped to the image grid
    let map = io::load_matrix(&out_dir.join("residual_map.bin")).unwrap();
    assert_eq!(map.shape(), (5, 8));
    // markers carry coordinates
    let markers: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("markers.json")).unwrap())
            .unwrap();
    assert_eq!(markers.as_array().unwrap().len(), 3);
    assert!(markers[0]["row"].is_u64());

    // rank exceeding the band count is a validation error
    let out = run(&[
        "unmix",
        "--input", dir.path().join("img.bin").to_str().unwrap(),
        "--rank", "9",
        "--out", dir.path().join("bad").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unmix_accepts_index_file_init() {
    let dir = tempfile::tempdir().unwrap();
    let spectra = Matrix::from_fn(6, 2, |i, j| ((i + 3 * j) % 5) as f64 * 0.3 + 0.2);
    let mut weights = Matrix::zeros(20, 2);
    weights.set(0, 0, 1.0);
    weights.set(1, 1, 1.0);
    for p in 2..20 {
        weights.set(p, 0, 0.3 + 0.02 * (p % 5) as f64);
        weights.set(p, 1, 0.6 - 0.02 * (p % 7) as f64);
    }
    let hsi = HsiMatrix::new(weights.matmul_t(&spectra), None).unwrap();
    io::save_hsi(&dir.path().join("img.bin"), &hsi).unwrap();
    io::save_indices(&dir.path().join("init.json"), &[5, 9]).unwrap();

    let out = run(&[
        "unmix",
        "--input", dir.path().join("img.bin").to_str().unwrap(),
        "--rank", "2",
        "--init", dir.path().join("init.json").to_str().unwrap(),
        "--out", dir.path().join("out").to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let summary: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("out/summary.json")).unwrap(),
    )
    .unwrap();
    // refinement from the poor file-based init never reports worse
    assert!(
        summary["rel_err"].as_f64().unwrap() <= summary["init_rel_err"].as_f64().unwrap()
    );
    let sel = io::load_indices(&dir.path().join("out/indices.json")).unwrap();
    assert_eq!(sel.len(), 2);
    assert_ne!(sel[0], sel[1]);
}

#[test]
fn spark_outputs_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let d = Matrix::from_vec(2, 3, vec![1., 0., 1., 0., 1., 1.]).unwrap();
    io::save_matrix(&dir.path().join("d.bin"), &d).unwrap();
    let out = run(&["spark", "--matrix", dir.path().join("d.bin").to_str().unwrap(), "--kmax", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");

    let id = Matrix::identity(3);
    io::save_matrix(&dir.path().join("id.bin"), &id).unwrap();
    let out = run(&["spark", "--matrix", dir.path().join("id.bin").to_str().unwrap(), "--kmax", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "exceeds kmax");

    // budget guard on a wide matrix
    let wide = Matrix::from_fn(4, 1000, |i, j| {
        ((i * 2654435761 + j * 40503 + i * j * 97) % 1009) as f64 / 17.0 - 29.0
    });
    io::save_matrix(&dir.path().join("wide.bin"), &wide).unwrap();
    let out = run(&["spark", "--matrix", dir.path().join("wide.bin").to_str().unwrap(), "--kmax", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("budget"));
}
