#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_hierarchyrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

pub fn path_str(p: &Path) -> String {
    p.display().to_string()
}

/// Runs and insists on exit 0.
pub fn ok<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let out = run(args);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    out
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

pub fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

/// Every file in a directory, keyed by name.
pub fn files(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect()
}

/// Data files must match byte for byte. Manifests are compared after
/// dropping the `--out` value, which is the only field naming the directory.
pub fn assert_same_outputs(a: &Path, b: &Path) {
    let (fa, fb) = (files(a), files(b));
    assert_eq!(fa.keys().collect::<Vec<_>>(), fb.keys().collect::<Vec<_>>());
    for (name, bytes) in &fa {
        if name == "manifest.json" {
            let strip = |dir: &Path| {
                let mut m = json(&dir.join(name));
                m["args"] = serde_json::Value::Null;
                m
            };
            assert_eq!(strip(a), strip(b));
        } else {
            assert!(bytes == &fb[name], "{name} differs between {a:?} and {b:?}");
        }
    }
}

pub fn records_header() -> String {
    "person_id,phd_institution,phd_year,discipline,hire_institution\n".to_string()
}

/// Expands a weighted edge-list CSV into one record per placement.
pub fn records_from_edges(edges_csv: &str, year: u32, id_prefix: &str) -> String {
    let mut out = String::new();
    let mut k = 0;
    for line in edges_csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let w: u64 = f[2].parse().unwrap();
        for _ in 0..w {
            out.push_str(&format!(
                "{id_prefix}{k},{},{year},synthetic,{}\n",
                f[0], f[1]
            ));
            k += 1;
        }
    }
    out
}

/// institution name -> rank, from a ranking or truth CSV.
pub fn ranks_by_name(path: &Path, rank_col: &str) -> BTreeMap<String, usize> {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let ri = header.iter().position(|&c| c == rank_col).unwrap();
    let ni = header.iter().position(|&c| c == "institution").unwrap();
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[ni].to_string(), f[ri].parse().unwrap())
        })
        .collect()
}

/// Kendall tau-a over paired rank vectors, by direct pair counting.
pub fn kendall_tau(a: &[usize], b: &[usize]) -> f64 {
    let n = a.len();
    let mut s = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            let x = (a[i] as i64 - a[j] as i64).signum();
            let y = (b[i] as i64 - b[j] as i64).signum();
            s += x * y;
        }
    }
    s as f64 / (n * (n - 1) / 2) as f64
}
