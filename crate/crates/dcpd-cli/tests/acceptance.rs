//! Acceptance criterion 9 — determinism: any CLI invocation repeated with
//! the same seed produces byte-identical CSV/JSON outputs, including the
//! benchmark under `--jobs > 1`.

use dcpd::dictionary::project;
use dcpd::io;
use dcpd::matrix::Matrix;
use dcpd::selfdict::HsiMatrix;
use dcpd::solvers::init_random;
use dcpd::tensor::cpd_reconstruct;
use dcpd::{Dictionary, Factors, Selection};
use std::path::Path;
use std::process::Command;

fn run_ok(args: &[&str]) {
    let out = Command::new(env!("CARGO_BIN_EXE_dcpd"))
        .args(args)
        .env_remove("DCPD_SEED")
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "dcpd {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

fn assert_identical_trees(a: &Path, b: &Path) {
    let mut names: Vec<String> = std::fs::read_dir(a)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(!names.is_empty());
    for name in names {
        let x = std::fs::read(a.join(&name)).unwrap();
        let y = std::fs::read(b.join(&name)).unwrap_or_else(|_| panic!("{name} missing in second run"));
        assert_eq!(x, y, "{name} differs between reruns");
    }
}

#[test]
fn acceptance_9_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();

    // decompose inputs
    let mut atoms = Matrix::from_fn(14, 24, |i, j| ((i * 5 + j * 11 + i * j) % 19) as f64 - 9.0);
    atoms.normalize_cols();
    let dict = Dictionary::new(atoms, None).unwrap();
    let sel = Selection::new(vec![3, 8, 17], vec![1; 3]).unwrap();
    let truth = Factors::new(
        init_random((7, 14, 5), 3, 1).a,
        project(&sel, &dict).unwrap(),
        init_random((7, 14, 5), 3, 2).c,
    )
    .unwrap();
    io::save_tensor(&dir.path().join("t.bin"), &cpd_reconstruct(&truth)).unwrap();
    io::save_dictionary(&dir.path().join("d.bin"), &dict).unwrap();

    for (label, out_a, out_b) in [
        ("decompose", "dec_a", "dec_b"),
    ] {
        let _ = label;
        for out in [out_a, out_b] {
            run_ok(&[
                "decompose",
                "--tensor", dir.path().join("t.bin").to_str().unwrap(),
                "--dict", dir.path().join("d.bin").to_str().unwrap(),
                "--solver", "smpals",
                "--rank", "3",
                "--seed", "77",
                "--out", dir.path().join(out).to_str().unwrap(),
            ]);
        }
        assert_identical_trees(&dir.path().join(out_a), &dir.path().join(out_b));
    }

    // synth: rerun and a different worker count must be byte-identical
    let synth = |out: &str, jobs: &str| {
        run_ok(&[
            "synth",
            "--dims", "6,22,4",
            "--atoms", "44",
            "--classes", "11",
            "--rank", "3",
            "--re", "2..4",
            "--rho", "0.5,1.0",
            "--trials", "3",
            "--sigma", "0.02",
            "--seed", "20260808",
            "--jobs", jobs,
            "--solvers", "projected-als,mpals,smpals,rand-mpals",
            "--out", dir.path().join(out).to_str().unwrap(),
        ]);
    };
    synth("sy_a", "1");
    synth("sy_b", "1");
    synth("sy_c", "2");
    assert_identical_trees(&dir.path().join("sy_a"), &dir.path().join("sy_b"));
    assert_identical_trees(&dir.path().join("sy_a"), &dir.path().join("sy_c"));

    // unmix
    let hsi = {
        let spectra = Matrix::from_fn(9, 3, |i, j| ((i * 3 + j * 5) % 7) as f64 * 0.2 + 0.1);
        let mut weights = Matrix::zeros(60, 3);
        for r in 0..3 {
            weights.set(r, r, 1.0);
        }
        for p in 3..60 {
            let w = [(p % 3) as f64 + 0.4, ((p + 1) % 4) as f64 + 0.2, ((p + 2) % 5) as f64 + 0.1];
            let total: f64 = w.iter().sum::<f64>() + 0.7;
            for (r, wv) in w.iter().enumerate() {
                weights.set(p, r, 0.8 * wv / total);
            }
        }
        HsiMatrix::new(weights.matmul_t(&spectra), Some((6, 10))).unwrap()
    };
    io::save_hsi(&dir.path().join("img.bin"), &hsi).unwrap();
    for out in ["un_a", "un_b"] {
        run_ok(&[
            "unmix",
            "--input", dir.path().join("img.bin").to_str().unwrap(),
            "--rank", "3",
            "--init", "spa",
            "--seed", "5",
            "--out", dir.path().join(out).to_str().unwrap(),
        ]);
    }
    assert_identical_trees(&dir.path().join("un_a"), &dir.path().join("un_b"));

    println!("ACCEPTANCE 9 (CLI determinism, including --jobs 2): PASS");
}
