use std::fmt::Write;

use clap::ValueEnum;
use hhzk::complex::SimplicialComplex;
use hhzk::hochster::ChComplex;
use hhzk::koszul::{hochster_to_koszul_iso, KoszulCohomology};
use hhzk::linalg::{Int, Ring};
use hhzk::{BigradedModule, Error};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    #[value(name = "H")]
    H,
    #[value(name = "HH")]
    HH,
    #[value(name = "HHhom")]
    HHhom,
    #[value(name = "all")]
    All,
}

#[derive(Serialize)]
pub struct InputSummary {
    pub source: String,
    pub m: usize,
    pub maximal_faces: Vec<Vec<usize>>,
    pub dimension: isize,
    pub coefficients: String,
    pub simplex: bool,
    pub flag: bool,
    pub chordal_skeleton: bool,
    pub wedge_decomposable: bool,
}

#[derive(Serialize)]
pub struct Row {
    pub bidegree: String,
    pub k: usize,
    pub two_l: usize,
    pub rank: usize,
    pub torsion: Vec<Int>,
}

#[derive(Serialize)]
pub struct Report {
    pub input: InputSummary,
    #[serde(rename = "H")]
    pub h: Option<Vec<Row>>,
    #[serde(rename = "HH")]
    pub hh: Option<Vec<Row>>,
    #[serde(rename = "HH_hom")]
    pub hh_hom: Option<Vec<Row>>,
    /// Euler characteristic of `HH`, when computed.
    pub euler: Option<i64>,
    /// Whether the Koszul pipeline reproduced every table; `None` unless verifying.
    pub agreement: Option<bool>,
}

fn rows(m: &BigradedModule) -> Vec<Row> {
    m.iter()
        .map(|(b, g)| Row {
            bidegree: b.to_string(),
            k: b.k,
            two_l: 2 * b.l,
            rank: g.rank,
            torsion: g.torsion.clone(),
        })
        .collect()
}

pub fn compute<R: Ring>(
    ring: &R,
    source: &str,
    k: &SimplicialComplex,
    what: What,
    verify: bool,
) -> Result<Report, Error> {
    let wants = |w: What| what == w || what == What::All;
    let ch = ChComplex::cohomology(ring, k)?;
    let h = ch.module();
    let hh = if wants(What::HH) || verify {
        Some(ch.double()?.module)
    } else {
        None
    };
    let hh_hom = if wants(What::HHhom) {
        Some(ChComplex::homology(ring, k)?.double()?.module)
    } else {
        None
    };
    let agreement = if verify {
        let kc = KoszulCohomology::new(ring, k)?;
        kc.r_complex().check_identities(ring)?;
        hochster_to_koszul_iso(k)?;
        Some(kc.module() == h && Some(kc.double()?.module) == hh)
    } else {
        None
    };
    let hh = hh.filter(|_| wants(What::HH));
    Ok(Report {
        input: InputSummary {
            source: source.to_string(),
            m: k.m(),
            maximal_faces: k.facet_lists(),
            dimension: k.dimension(),
            coefficients: ring.coefficients().to_string(),
            simplex: k.is_simplex(),
            flag: k.is_flag(),
            chordal_skeleton: k.is_chordal_skeleton(),
            wedge_decomposable: k.is_wedge_decomposable(),
        },
        euler: hh.as_ref().map(|m| m.euler_characteristic()),
        h: wants(What::H).then(|| rows(&h)),
        hh: hh.as_ref().map(rows),
        hh_hom: hh_hom.as_ref().map(rows),
        agreement,
    })
}

fn group(coeffs: &str, row: &Row) -> String {
    let mut parts = Vec::new();
    match row.rank {
        0 => {}
        1 => parts.push(coeffs.to_string()),
        r => parts.push(format!("{coeffs}^{r}")),
    }
    parts.extend(row.torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl Report {
    /// Plain-text tables, sorted by `(l, k)`.
    pub fn render(&self) -> String {
        let i = &self.input;
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(
            out,
            "complex: {} (m = {}, {} maximal faces, dimension {})",
            i.source,
            i.m,
            i.maximal_faces.len(),
            i.dimension
        )
        .unwrap();
        writeln!(
            out,
            "simplex: {}, flag: {}, chordal 1-skeleton: {}, wedge decomposable: {}",
            yes_no(i.simplex),
            yes_no(i.flag),
            yes_no(i.chordal_skeleton),
            yes_no(i.wedge_decomposable)
        )
        .unwrap();
        let coeffs = &i.coefficients;
        for (title, table) in [("H", &self.h), ("HH", &self.hh), ("HH_*", &self.hh_hom)] {
            let Some(table) = table else { continue };
            writeln!(out, "\n{title} with {coeffs} coefficients").unwrap();
            writeln!(
                out,
                "{:>10}  {:>5}  {:<10}  group",
                "bidegree", "rank", "torsion"
            )
            .unwrap();
            for row in table {
                let tors: Vec<String> = row.torsion.iter().map(|t| t.to_string()).collect();
                writeln!(
                    out,
                    "{:>10}  {:>5}  {:<10}  {}",
                    row.bidegree,
                    row.rank,
                    format!("[{}]", tors.join(", ")),
                    group(coeffs, row)
                )
                .unwrap();
            }
        }
        if let Some(e) = self.euler {
            writeln!(out, "\nEuler characteristic of HH: {e}").unwrap();
        }
        if let Some(a) = self.agreement {
            writeln!(out, "pipelines agree: {}", yes_no(a)).unwrap();
        }
        out
    }
}
