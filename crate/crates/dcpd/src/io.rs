//! File formats.
//!
//! Numeric arrays use one repo-wide format: raw little-endian IEEE f64 in
//! row-major order, with a JSON sidecar at `<path>.json` holding
//! `{"dims": [...], "order": "row-major", "dtype": "f64"}`. Matrices may
//! also be plain-text CSV (one row per line, detected by the `.csv`
//! extension). Hyperspectral inputs may carry `"height"`/`"width"` keys in
//! the sidecar. Atom indices in every artifact are zero-based.

use crate::dictionary::{Dictionary, Selection};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::selfdict::{HsiMatrix, UnmixResult};
use crate::synthbench::{BenchSolver, ExperimentReport, GridCell, GridParam, TrialRecord};
use crate::tensor::Tensor3;
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

#[derive(Debug, Serialize, Deserialize)]
struct Sidecar {
    dims: Vec<usize>,
    order: String,
    dtype: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    height: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    width: Option<usize>,
}

impl Sidecar {
    fn new(dims: Vec<usize>) -> Self {
        Sidecar { dims, order: "row-major".into(), dtype: "f64".into(), height: None, width: None }
    }

    fn check(&self, path: &Path) -> Result<()> {
        if self.order != "row-major" {
            return Err(Error::Parse(format!(
                "{}: unsupported order '{}'",
                path.display(),
                self.order
            )));
        }
        if self.dtype != "f64" {
            return Err(Error::Parse(format!(
                "{}: unsupported dtype '{}'",
                path.display(),
                self.dtype
            )));
        }
        Ok(())
    }
}

pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write_sidecar(path: &Path, sidecar: &Sidecar) -> Result<()> {
    let json = serde_json::to_string_pretty(sidecar)
        .map_err(|e| Error::Parse(format!("sidecar encode: {e}")))?;
    fs::write(sidecar_path(path), json + "\n")?;
    Ok(())
}

fn read_sidecar(path: &Path) -> Result<Sidecar> {
    let sc_path = sidecar_path(path);
    let text = fs::read_to_string(&sc_path)?;
    let sidecar: Sidecar = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", sc_path.display())))?;
    sidecar.check(path)?;
    Ok(sidecar)
}

fn write_f64_raw(path: &Path, values: &[f64]) -> Result<()> {
    let mut file = fs::File::create(path)?;
    let mut buf = Vec::with_capacity(values.len() * 8);
    for v in values {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    file.write_all(&buf)?;
    Ok(())
}

fn read_f64_raw(path: &Path, expected: usize) -> Result<Vec<f64>> {
    let mut bytes = Vec::new();
    fs::File::open(path)?.read_to_end(&mut bytes)?;
    if bytes.len() != expected * 8 {
        return Err(Error::Parse(format!(
            "{}: {} bytes, expected {} ({} f64 values)",
            path.display(),
            bytes.len(),
            expected * 8,
            expected
        )));
    }
    Ok(bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
        .collect())
}

fn is_csv(path: &Path) -> bool {
    path.extension().map_or(false, |e| e.eq_ignore_ascii_case("csv"))
}

pub fn save_matrix(path: &Path, m: &Matrix) -> Result<()> {
    if is_csv(path) {
        return save_matrix_csv(path, m);
    }
    write_f64_raw(path, m.data())?;
    write_sidecar(path, &Sidecar::new(vec![m.rows(), m.cols()]))
}

pub fn load_matrix(path: &Path) -> Result<Matrix> {
    if is_csv(path) {
        return load_matrix_csv(path);
    }
    let sidecar = read_sidecar(path)?;
    if sidecar.dims.len() != 2 {
        return Err(Error::Parse(format!(
            "{}: sidecar has {} dims, expected 2",
            path.display(),
            sidecar.dims.len()
        )));
    }
    let (rows, cols) = (sidecar.dims[0], sidecar.dims[1]);
    let data = read_f64_raw(path, rows * cols)?;
    Matrix::from_vec(rows, cols, data)
}

pub fn save_matrix_csv(path: &Path, m: &Matrix) -> Result<()> {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| fmt_f64(*v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn load_matrix_csv(path: &Path) -> Result<Matrix> {
    let text = fs::read_to_string(path)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|tok| {
                tok.trim().parse::<f64>().map_err(|_| {
                    Error::Parse(format!(
                        "{} line {}: '{}' is not a number",
                        path.display(),
                        lineno + 1,
                        tok
                    ))
                })
            })
            .collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse(format!(
                    "{} line {}: {} fields, expected {}",
                    path.display(),
                    lineno + 1,
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse(format!("{}: empty CSV", path.display())));
    }
    let cols = rows[0].len();
    let data: Vec<f64> = rows.into_iter().flatten().collect();
    Matrix::from_vec(data.len() / cols, cols, data)
}

pub fn save_tensor(path: &Path, t: &Tensor3) -> Result<()> {
    let (k, l, m) = t.dims();
    write_f64_raw(path, t.data())?;
    write_sidecar(path, &Sidecar::new(vec![k, l, m]))
}

pub fn load_tensor(path: &Path) -> Result<Tensor3> {
    let sidecar = read_sidecar(path)?;
    if sidecar.dims.len() != 3 {
        return Err(Error::Parse(format!(
            "{}: sidecar has {} dims, expected 3",
            path.display(),
            sidecar.dims.len()
        )));
    }
    let dims = (sidecar.dims[0], sidecar.dims[1], sidecar.dims[2]);
    let data = read_f64_raw(path, dims.0 * dims.1 * dims.2)?;
    Tensor3::from_vec(dims, data)
}

/// Dictionary = atom matrix plus an optional `atom_index,label` CSV.
pub fn save_dictionary(path: &Path, dict: &Dictionary) -> Result<()> {
    save_matrix(path, dict.atoms())?;
    if let Some(labels) = dict.class_labels() {
        let mut out = String::new();
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("{i},{l}\n"));
        }
        fs::write(labels_path(path), out)?;
    }
    Ok(())
}

fn labels_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".labels.csv");
    PathBuf::from(s)
}

pub fn load_dictionary(path: &Path) -> Result<Dictionary> {
    let atoms = load_matrix(path)?;
    let lp = labels_path(path);
    let labels = if lp.exists() {
        let text = fs::read_to_string(&lp)?;
        let mut labels = vec![0usize; atoms.cols()];
        let mut seen = vec![false; atoms.cols()];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.and_then(|t| t.trim().parse::<usize>().ok()).ok_or_else(|| {
                    Error::Parse(format!("{} line {}: bad label row", lp.display(), lineno + 1))
                })
            };
            let idx = parse(parts.next())?;
            let label = parse(parts.next())?;
            if idx >= atoms.cols() {
                return Err(Error::Parse(format!(
                    "{} line {}: atom index {idx} out of range",
                    lp.display(),
                    lineno + 1
                )));
            }
            labels[idx] = label;
            seen[idx] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Parse(format!("{}: not every atom is labeled", lp.display())));
        }
        Some(labels)
    } else {
        None
    };
    Dictionary::new(atoms, labels)
}

/// Loads a pixels-by-bands matrix as a hyperspectral image; spatial dims come
/// from `height`/`width` sidecar keys when present.
pub fn load_hsi(path: &Path) -> Result<HsiMatrix> {
    let values = load_matrix(path)?;
    let spatial = if is_csv(path) {
        let sc_path = sidecar_path(path);
        if sc_path.exists() {
            let sidecar: Sidecar = serde_json::from_str(&fs::read_to_string(&sc_path)?)
                .map_err(|e| Error::Parse(format!("{}: {e}", sc_path.display())))?;
            sidecar.height.zip(sidecar.width)
        } else {
            None
        }
    } else {
        let sidecar = read_sidecar(path)?;
        sidecar.height.zip(sidecar.width)
    };
    HsiMatrix::new(values, spatial)
}

pub fn save_hsi(path: &Path, hsi: &HsiMatrix) -> Result<()> {
    if is_csv(path) {
        save_matrix_csv(path, hsi.values())?;
        if let Some((h, w)) = hsi.spatial() {
            let mut sidecar = Sidecar::new(vec![hsi.pixels(), hsi.bands()]);
            sidecar.height = Some(h);
            sidecar.width = Some(w);
            write_sidecar(path, &sidecar)?;
        }
        return Ok(());
    }
    write_f64_raw(path, hsi.values().data())?;
    let mut sidecar = Sidecar::new(vec![hsi.pixels(), hsi.bands()]);
    if let Some((h, w)) = hsi.spatial() {
        sidecar.height = Some(h);
        sidecar.width = Some(w);
    }
    write_sidecar(path, &sidecar)
}

/// Shortest-roundtrip decimal for f64, with non-finite values spelled so the
/// standard parser reads them back.
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v}")
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SelectionFile {
    pub indices: Vec<usize>,
    pub signs: Vec<i8>,
}

pub fn save_selection(path: &Path, sel: &Selection) -> Result<()> {
    let file = SelectionFile { indices: sel.indices.clone(), signs: sel.signs.clone() };
    let json = serde_json::to_string_pretty(&file)
        .map_err(|e| Error::Parse(format!("selection encode: {e}")))?;
    fs::write(path, json + "\n")?;
    Ok(())
}

pub fn load_selection(path: &Path) -> Result<Selection> {
    let text = fs::read_to_string(path)?;
    let file: SelectionFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Selection::new(file.indices, file.signs)
}

/// A plain list of pixel/atom indices (used for externally supplied
/// initializations).
pub fn load_indices(path: &Path) -> Result<Vec<usize>> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn save_indices(path: &Path, indices: &[usize]) -> Result<()> {
    let json = serde_json::to_string(indices)
        .map_err(|e| Error::Parse(format!("indices encode: {e}")))?;
    fs::write(path, json + "\n")?;
    Ok(())
}

pub fn save_cost_trace(path: &Path, trace: &[f64]) -> Result<()> {
    let mut out = String::from("iteration,cost\n");
    for (i, c) in trace.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, fmt_f64(*c)));
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn load_cost_trace(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        let cost = line.rsplit(',').next().and_then(|t| t.trim().parse::<f64>().ok());
        match cost {
            Some(c) => out.push(c),
            None => {
                return Err(Error::Parse(format!(
                    "{} line {}: bad cost row",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Ok(out)
}

/// Per-trial benchmark CSV, schema
/// `grid_param,value,solver,trial,id_rate,rmse_B,rel_err,runtime_s`.
/// Wall-clock columns are zeroed unless `timings` is set, keeping rerun
/// outputs byte-identical.
pub fn save_report_csv(path: &Path, report: &ExperimentReport, timings: bool) -> Result<()> {
    let mut out = String::from("grid_param,value,solver,trial,id_rate,rmse_B,rel_err,runtime_s\n");
    for rec in &report.records {
        let runtime = if timings { rec.runtime_s } else { 0.0 };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            rec.cell.param.name(),
            fmt_f64(rec.cell.value),
            rec.solver,
            rec.trial,
            fmt_f64(rec.id_rate.unwrap_or(f64::NAN)),
            fmt_f64(rec.rmse_b),
            fmt_f64(rec.rel_err),
            fmt_f64(runtime),
        ));
    }
    fs::write(path, out)?;
    Ok(())
}

/// Parses a [`save_report_csv`] file back into per-trial records.
pub fn load_report_csv(path: &Path) -> Result<Vec<TrialRecord>> {
    let text = fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        let bad = || Error::Parse(format!("{} line {}: bad record", path.display(), lineno + 1));
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(bad());
        }
        let param = match fields[0] {
            "Re" => GridParam::Re,
            "rho" => GridParam::Rho,
            _ => return Err(bad()),
        };
        let value: f64 = fields[1].parse().map_err(|_| bad())?;
        let solver: BenchSolver = fields[2].parse()?;
        let trial: usize = fields[3].parse().map_err(|_| bad())?;
        let id_rate: f64 = fields[4].parse().map_err(|_| bad())?;
        let rmse_b: f64 = fields[5].parse().map_err(|_| bad())?;
        let rel_err: f64 = fields[6].parse().map_err(|_| bad())?;
        let runtime_s: f64 = fields[7].parse().map_err(|_| bad())?;
        out.push(TrialRecord {
            cell: GridCell { param, value },
            solver,
            trial,
            id_rate: (!id_rate.is_nan()).then_some(id_rate),
            rmse_b,
            rel_err,
            runtime_s,
            snr_db: None,
        });
    }
    Ok(out)
}

/// Parses a gnuplot `.dat` table: a header row of column names, then
/// whitespace-separated numeric rows.
pub fn load_table_dat(path: &Path) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .ok_or_else(|| Error::Parse(format!("{}: empty table", path.display())))?
        .split_whitespace()
        .map(str::to_owned)
        .collect();
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let row: Vec<f64> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>().map_err(|_| {
                    Error::Parse(format!("{} line {}: bad value", path.display(), lineno + 2))
                })
            })
            .collect::<Result<_>>()?;
        if row.len() != header.len() {
            return Err(Error::Parse(format!(
                "{} line {}: {} fields, expected {}",
                path.display(),
                lineno + 2,
                row.len(),
                header.len()
            )));
        }
        rows.push(row);
    }
    Ok((header, rows))
}

/// Aggregate JSON (the whole [`ExperimentReport`]); timings zeroed unless
/// requested.
pub fn save_report_json(path: &Path, report: &ExperimentReport, timings: bool) -> Result<()> {
    let mut copy = report.clone();
    if !timings {
        for rec in copy.records.iter_mut() {
            rec.runtime_s = 0.0;
        }
        for s in copy.summaries.iter_mut() {
            s.mean_runtime_s = 0.0;
        }
    }
    let json = serde_json::to_string_pretty(&copy)
        .map_err(|e| Error::Parse(format!("report encode: {e}")))?;
    fs::write(path, json + "\n")?;
    Ok(())
}

pub fn load_report_json(path: &Path) -> Result<ExperimentReport> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Gnuplot-ready mean-metric tables plus the scripts that plot them: the
/// identification rate against the estimated rank and against the
/// conditioning, and the factor error against the conditioning.
pub fn save_gnuplot_bundle(outdir: &Path, report: &ExperimentReport) -> Result<()> {
    let figures: [(&str, GridParam, &str, &str); 4] = [
        ("id_rate_vs_re", GridParam::Re, "id_rate", "mean identification rate"),
        ("id_rate_vs_rho", GridParam::Rho, "id_rate", "mean identification rate"),
        ("rmse_vs_rho", GridParam::Rho, "rmse_b", "mean rMSE on B"),
        ("rmse_vs_re", GridParam::Re, "rmse_b", "mean rMSE on B"),
    ];
    for (stem, param, metric, ylabel) in figures {
        let mut values: Vec<f64> = report
            .summaries
            .iter()
            .filter(|s| s.cell.param == param)
            .map(|s| s.cell.value)
            .collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        values.dedup();
        if values.is_empty() {
            continue;
        }
        let with_oracle = metric == "id_rate";
        let mut dat = String::from("value");
        for s in &report.solvers {
            dat.push_str(&format!(" {}", s.name()));
        }
        if with_oracle {
            dat.push_str(" oracle");
        }
        dat.push('\n');
        for &v in &values {
            dat.push_str(&fmt_f64(v));
            let mut oracle = 1.0;
            for &solver in &report.solvers {
                let s = report
                    .summary(param, v, solver)
                    .ok_or_else(|| Error::Numerical("missing cell summary".into()))?;
                let metric_value = match metric {
                    "id_rate" => s.mean_id_rate.unwrap_or(f64::NAN),
                    _ => s.mean_rmse_b,
                };
                dat.push_str(&format!(" {}", fmt_f64(metric_value)));
                oracle = s.oracle_rate;
            }
            if with_oracle {
                dat.push_str(&format!(" {}", fmt_f64(oracle)));
            }
            dat.push('\n');
        }
        fs::write(outdir.join(format!("{stem}.dat")), dat)?;

        let ncols = report.solvers.len() + 1 + usize::from(with_oracle);
        let script = format!(
            "set datafile missing 'nan'\n\
             set key autotitle columnhead outside\n\
             set xlabel '{}'\n\
             set ylabel '{}'\n\
             set term pngcairo size 800,520\n\
             set output '{stem}.png'\n\
             plot for [i=2:{ncols}] '{stem}.dat' using 1:i with linespoints\n",
            param.name(),
            ylabel,
        );
        fs::write(outdir.join(format!("{stem}.gp")), script)?;
    }
    Ok(())
}

/// Everything the unmixing pipeline emits: endmember spectra, abundances,
/// the residual map (reshaped to height x width when known), the selected
/// pixel indices, and a marker file with the selected pixel coordinates.
pub fn save_unmix_outputs(
    outdir: &Path,
    hsi: &HsiMatrix,
    result: &UnmixResult,
    timings: bool,
) -> Result<()> {
    fs::create_dir_all(outdir)?;
    save_matrix(&outdir.join("endmembers.bin"), &result.endmembers)?;
    save_matrix(&outdir.join("abundances.bin"), &result.abundances)?;
    let map = &result.residual_map;
    let map_matrix = match hsi.spatial() {
        Some((h, w)) => Matrix::from_vec(h, w, map.clone())?,
        None => Matrix::from_vec(map.len(), 1, map.clone())?,
    };
    save_matrix(&outdir.join("residual_map.bin"), &map_matrix)?;
    save_indices(&outdir.join("indices.json"), &result.endmember_indices)?;

    #[derive(Serialize)]
    struct Marker {
        pixel: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        row: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        col: Option<usize>,
    }
    let markers: Vec<Marker> = result
        .endmember_indices
        .iter()
        .map(|&p| match hsi.spatial() {
            Some((_, w)) => Marker { pixel: p, row: Some(p / w), col: Some(p % w) },
            None => Marker { pixel: p, row: None, col: None },
        })
        .collect();
    let json = serde_json::to_string_pretty(&markers)
        .map_err(|e| Error::Parse(format!("markers encode: {e}")))?;
    fs::write(outdir.join("markers.json"), json + "\n")?;

    #[derive(Serialize)]
    struct Summary {
        endmember_indices: Vec<usize>,
        rel_err: f64,
        init_rel_err: f64,
        iterations: usize,
        converged: bool,
        runtime_s: f64,
    }
    let summary = Summary {
        endmember_indices: result.endmember_indices.clone(),
        rel_err: result.rel_err,
        init_rel_err: result.init_rel_err,
        iterations: result.iterations,
        converged: result.converged,
        runtime_s: if timings { result.wall_time_s } else { 0.0 },
    };
    let json = serde_json::to_string_pretty(&summary)
        .map_err(|e| Error::Parse(format!("summary encode: {e}")))?;
    fs::write(outdir.join("summary.json"), json + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn matrix_binary_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("m.bin");
        let m = Matrix::from_vec(2, 3, vec![1.5, -2.0, 0.0, 3.25, 1e-300, 7.0]).unwrap();
        save_matrix(&path, &m).unwrap();
        assert!(sidecar_path(&path).exists());
        let back = load_matrix(&path).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn matrix_csv_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("m.csv");
        let m = Matrix::from_vec(3, 2, vec![1.0, 2.5, -3.125, 4.0, 0.1, -0.2]).unwrap();
        save_matrix(&path, &m).unwrap();
        let back = load_matrix(&path).unwrap();
        assert_eq!(m, back);
        // jagged rows rejected
        std::fs::write(&path, "1,2\n3\n").unwrap();
        assert!(load_matrix(&path).is_err());
    }

    #[test]
    fn tensor_round_trip_and_bad_sidecar() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("t.bin");
        let t = Tensor3::from_vec((2, 2, 2), (0..8).map(|i| i as f64 * 0.5).collect()).unwrap();
        save_tensor(&path, &t).unwrap();
        assert_eq!(load_tensor(&path).unwrap(), t);
        // corrupt dims
        std::fs::write(
            sidecar_path(&path),
            r#"{"dims":[2,2],"order":"row-major","dtype":"f64"}"#,
        )
        .unwrap();
        assert!(load_tensor(&path).is_err());
    }

    #[test]
    fn dictionary_with_labels_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("dict.bin");
        let atoms = Matrix::from_vec(2, 3, vec![1., 0., 1., 0., 1., 1.]).unwrap();
        let dict = Dictionary::new(atoms, Some(vec![0, 1, 1])).unwrap();
        save_dictionary(&path, &dict).unwrap();
        let back = load_dictionary(&path).unwrap();
        assert_eq!(back.atoms(), dict.atoms());
        assert_eq!(back.class_labels(), dict.class_labels());
    }

    #[test]
    fn hsi_with_spatial_dims() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("img.bin");
        let values = Matrix::from_vec(6, 2, (0..12).map(|i| i as f64).collect()).unwrap();
        let hsi = HsiMatrix::new(values, Some((2, 3))).unwrap();
        save_hsi(&path, &hsi).unwrap();
        let back = load_hsi(&path).unwrap();
        assert_eq!(back.spatial(), Some((2, 3)));
        assert_eq!(back.values(), hsi.values());
    }

    #[test]
    fn selection_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("sel.json");
        let sel = Selection::new(vec![4, 0, 9], vec![1, -1, 1]).unwrap();
        save_selection(&path, &sel).unwrap();
        assert_eq!(load_selection(&path).unwrap(), sel);
    }

    #[test]
    fn fmt_f64_round_trips_special_values() {
        for v in [1.0, -0.125, 1e-300, f64::INFINITY, f64::NEG_INFINITY] {
            let s = fmt_f64(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "{s}");
        }
        assert!(fmt_f64(f64::NAN).parse::<f64>().unwrap().is_nan());
    }
}
