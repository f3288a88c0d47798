//! Output files and the summary tables: curve rows as JSONL/CSV, one row per
//! isogeny class, and the five distribution tables.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use crate::census::CensusResult;
use crate::record::CurveRecord;
use crate::zeta::{multiplicity_histogram, MultiplicityTable};
use crate::Result;

/// One distribution table: curves per value of a_k, split by family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistTable {
    /// Which a_k this table counts (1-based).
    pub index: usize,
    /// Column range is 0..hyp.len().
    pub hyp: Vec<u32>,
    pub trig: Vec<u32>,
    pub total: Vec<u32>,
}

/// Column counts of the four distribution tables (values 0..=max).
const DIST_COLUMNS: [usize; 4] = [9, 8, 9, 11];

/// Largest isogeny-class size tracked by the multiplicity table.
pub const MAX_CLASS_SIZE: usize = 7;

pub fn distribution_table(records: &[CurveRecord], index: usize) -> DistTable {
    let cols = DIST_COLUMNS[index - 1];
    let mut hyp = vec![0u32; cols];
    let mut trig = vec![0u32; cols];
    let mut total = vec![0u32; cols];
    for r in records {
        let value = r.a[index - 1] as usize;
        assert!(value < cols, "a_{index} = {value} outside table range");
        if r.is_hyperelliptic() {
            hyp[value] += 1;
        } else {
            trig[value] += 1;
        }
        total[value] += 1;
    }
    DistTable { index, hyp, trig, total }
}

/// All five tables, ready for emission or assertion.
#[derive(Debug, Clone)]
pub struct Tables {
    pub dist: [DistTable; 4],
    pub multiplicity: MultiplicityTable,
}

pub fn tables(result: &CensusResult) -> Tables {
    Tables {
        dist: [
            distribution_table(&result.records, 1),
            distribution_table(&result.records, 2),
            distribution_table(&result.records, 3),
            distribution_table(&result.records, 4),
        ],
        multiplicity: multiplicity_histogram(&result.iso_classes, MAX_CLASS_SIZE),
    }
}

// Write via a temp file and rename, so failed runs leave no partial output.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn curves_jsonl(records: &[CurveRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(&r.to_row()).expect("serializable row"));
        out.push('\n');
    }
    out
}

pub fn curves_csv(records: &[CurveRecord]) -> String {
    let mut out = String::from(
        "id,family,q,p,quadric,cubic,pretty,N1,N2,N3,N4,N5,a1,a2,a3,a4,a5,\
         L0,L1,L2,L3,L4,L5,L6,L7,L8,iso_class,iso_size\n",
    );
    for r in records {
        let row = r.to_row();
        let join = |v: &[i64]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            row.id,
            row.family,
            row.q.unwrap_or_default(),
            row.p.unwrap_or_default(),
            row.quadric.unwrap_or_default(),
            row.cubic.unwrap_or_default(),
            row.pretty,
            join(&row.n),
            join(&row.a),
            join(&row.l),
            row.iso_class,
            row.iso_size
        )
        .expect("string write");
    }
    out
}

pub fn lpolys_csv(result: &CensusResult) -> String {
    let mut out = String::from("iso_class,c0,c1,c2,c3,c4,c5,c6,c7,c8,size,hyp,trig\n");
    for cl in &result.iso_classes {
        let coeffs = cl
            .l
            .c
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        writeln!(out, "{},{},{},{},{}", cl.id, coeffs, cl.size, cl.hyp_members, cl.trig_members)
            .expect("string write");
    }
    out
}

pub fn summary_text(result: &CensusResult, elapsed: std::time::Duration) -> String {
    format!(
        "hyperelliptic: {}\ntrigonal: {}\ntotal: {}\nisogeny classes: {}\nwall time: {:.2?}\n",
        result.hyp_count(),
        result.trig_count(),
        result.records.len(),
        result.iso_classes.len(),
        elapsed
    )
}

fn dist_csv(t: &DistTable) -> String {
    let header: Vec<String> = (0..t.hyp.len()).map(|v| v.to_string()).collect();
    let mut out = format!("a{},{},total\n", t.index, header.join(","));
    for (name, row) in [("hyp", &t.hyp), ("trig", &t.trig), ("total", &t.total)] {
        let sum: u32 = row.iter().sum();
        let cells = row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        writeln!(out, "{name},{cells},{sum}").expect("string write");
    }
    out
}

fn mult_csv(m: &MultiplicityTable) -> String {
    let header: Vec<String> = (0..m.total.len()).map(|v| v.to_string()).collect();
    let mut out = format!("curves_with_same_L,{}\n", header.join(","));
    for (name, row) in [("hyp", &m.hyp), ("trig", &m.trig), ("total", &m.total)] {
        let cells = row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        writeln!(out, "{name},{cells}").expect("string write");
    }
    out
}

fn aligned(title: &str, col0: &str, cols: &[String], rows: &[(&str, Vec<String>)]) -> String {
    let mut widths: Vec<usize> = Vec::new();
    let mut header: Vec<String> = vec![col0.to_string()];
    header.extend(cols.iter().cloned());
    for (i, h) in header.iter().enumerate() {
        let mut w = h.len();
        for (name, cells) in rows {
            let cell = if i == 0 { name.to_string() } else { cells[i - 1].clone() };
            w = w.max(cell.len());
        }
        widths.push(w);
    }
    let mut out = format!("{title}\n");
    let fmt_row = |cells: &[String], widths: &[usize]| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}", w = w))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.push_str(&fmt_row(&header, &widths));
    out.push('\n');
    for (name, cells) in rows {
        let mut line = vec![name.to_string()];
        line.extend(cells.iter().cloned());
        out.push_str(&fmt_row(&line, &widths));
        out.push('\n');
    }
    out
}

pub fn tables_text(t: &Tables) -> String {
    let mut out = String::new();
    let captions = [
        "Curves for a given number of points",
        "Curves for a given number of degree 2 points",
        "Curves for a given number of degree 3 points",
        "Curves for a given number of degree 4 points",
    ];
    for (d, caption) in t.dist.iter().zip(captions) {
        let mut cols: Vec<String> = (0..d.hyp.len()).map(|v| v.to_string()).collect();
        cols.push("total".into());
        let add_total = |row: &[u32]| {
            let mut cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            cells.push(row.iter().sum::<u32>().to_string());
            cells
        };
        out.push_str(&aligned(
            caption,
            &format!("a_{}", d.index),
            &cols,
            &[
                ("hyperelliptic", add_total(&d.hyp)),
                ("trigonal", add_total(&d.trig)),
                ("total", add_total(&d.total)),
            ],
        ));
        out.push('\n');
    }
    let m = &t.multiplicity;
    let cols: Vec<String> = (0..m.total.len()).map(|v| v.to_string()).collect();
    let cells = |row: &[u32]| row.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    out.push_str(&aligned(
        "Number of L-polynomials shared by a given number of curves",
        "# curves",
        &cols,
        &[
            ("hyperelliptic", cells(&m.hyp)),
            ("trigonal", cells(&m.trig)),
            ("total", cells(&m.total)),
        ],
    ));
    out
}

/// File set produced by `run`.
pub struct RunFiles {
    pub curves_jsonl: PathBuf,
    pub curves_csv: Option<PathBuf>,
    pub lpolys_csv: PathBuf,
    pub summary_txt: PathBuf,
}

pub fn write_run_files(
    dir: &Path,
    result: &CensusResult,
    elapsed: std::time::Duration,
    with_csv: bool,
) -> Result<RunFiles> {
    fs::create_dir_all(dir)?;
    let files = RunFiles {
        curves_jsonl: dir.join("curves.jsonl"),
        curves_csv: with_csv.then(|| dir.join("curves.csv")),
        lpolys_csv: dir.join("lpolys.csv"),
        summary_txt: dir.join("summary.txt"),
    };
    write_atomic(&files.curves_jsonl, &curves_jsonl(&result.records))?;
    if let Some(csv) = &files.curves_csv {
        write_atomic(csv, &curves_csv(&result.records))?;
    }
    write_atomic(&files.lpolys_csv, &lpolys_csv(result))?;
    write_atomic(&files.summary_txt, &summary_text(result, elapsed))?;
    Ok(files)
}

pub fn write_table_files(dir: &Path, t: &Tables) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for d in &t.dist {
        let path = dir.join(format!("table_a{}.csv", d.index));
        write_atomic(&path, &dist_csv(d))?;
        written.push(path);
    }
    let path = dir.join("table_l.csv");
    write_atomic(&path, &mult_csv(&t.multiplicity))?;
    written.push(path);
    let path = dir.join("tables.txt");
    write_atomic(&path, &tables_text(t))?;
    written.push(path);
    Ok(written)
}
