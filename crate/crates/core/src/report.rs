//! Dimension reports: the closed form, two brute-force orbit counts and the Hecke
//! computation side by side, plus the sweep table built from them.

use std::fmt;
use std::io;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{self, CoverError, CoverKind, CoverSpec, TypeSpec};
use crate::hecke_affine::{gg_module, AffineError};

/// Column order of the sweep CSV.
pub const CSV_HEADER: [&str; 16] = [
    "kind",
    "n",
    "c",
    "d",
    "r",
    "k",
    "l0",
    "r0",
    "n0",
    "d0",
    "x_order",
    "orbit_count",
    "dim_closed",
    "dim_bruteforce",
    "dim_hecke",
    "agree",
];

/// Echo of the parameters a report was computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Params {
    pub kind: CoverKind,
    pub n: i64,
    pub c: i64,
    pub d: i64,
    pub r: i64,
    pub k: i64,
    pub l0: i64,
    pub f: u32,
}

impl Params {
    pub fn cover(&self) -> Result<CoverSpec, CoverError> {
        CoverSpec::new(self.kind, self.n, self.c, self.d)
    }

    pub fn type_spec(&self) -> Result<TypeSpec, CoverError> {
        TypeSpec::new(self.r, self.k, self.l0, self.f)
    }

    /// Both specs, validated against each other.
    pub fn validate(&self) -> Result<(CoverSpec, TypeSpec), CoverError> {
        let cov = self.cover()?;
        let ty = self.type_spec()?;
        ty.check_against(&cov)?;
        Ok((cov, ty))
    }
}

/// `None` marks a value that was skipped; `notes` says why.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub params: Params,
    pub r0: Option<i64>,
    pub n0: Option<i64>,
    pub d0: Option<i64>,
    pub x_order: Option<u64>,
    pub orbit_count: Option<u64>,
    pub dim_closed: Option<u64>,
    /// Orbit count by Burnside's lemma, independent of the explicit orbit walk.
    pub dim_bruteforce: Option<u64>,
    pub dim_hecke: Option<u64>,
    /// Whether every computed dimension agrees; `None` when fewer than two were computed.
    pub agree: Option<bool>,
    /// Specialization point of the Hecke computation, if any.
    pub q: Option<String>,
    pub notes: Vec<String>,
}

impl DimReport {
    pub fn disagrees(&self) -> bool {
        self.agree == Some(false)
    }

    pub fn csv_record(&self) -> Vec<String> {
        fn na<T: ToString>(x: Option<T>) -> String {
            x.map_or_else(|| "NA".to_string(), |v| v.to_string())
        }
        let p = &self.params;
        vec![
            p.kind.to_string(),
            p.n.to_string(),
            p.c.to_string(),
            p.d.to_string(),
            p.r.to_string(),
            p.k.to_string(),
            p.l0.to_string(),
            na(self.r0),
            na(self.n0),
            na(self.d0),
            na(self.x_order),
            na(self.orbit_count),
            na(self.dim_closed),
            na(self.dim_bruteforce),
            na(self.dim_hecke),
            na(self.agree),
        ]
    }
}

impl fmt::Display for DimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in CSV_HEADER.iter().zip(self.csv_record()) {
            writeln!(f, "{name:>14}: {value}")?;
        }
        if let Some(q) = &self.q {
            writeln!(f, "{:>14}: {q}", "q")?;
        }
        for note in &self.notes {
            writeln!(f, "{:>14}: {note}", "note")?;
        }
        Ok(())
    }
}

/// Runs every dimension computation the parameters allow.
///
/// Invalid parameters are an error; computations that are undefined for the
/// cover kind or exceed `bound` are skipped and noted.
pub fn dim_report(params: Params, bound: u64, q: Option<&BigRational>) -> Result<DimReport, CoverError> {
    let (cov, ty) = params.validate()?;
    let mut rep = DimReport {
        params,
        r0: None,
        n0: None,
        d0: None,
        x_order: None,
        orbit_count: None,
        dim_closed: None,
        dim_bruteforce: None,
        dim_hecke: None,
        agree: None,
        q: q.map(ToString::to_string),
        notes: Vec::new(),
    };
    let p = cover::derive_params(&cov, &ty)?;
    rep.r0 = Some(p.r0);
    rep.n0 = Some(p.n0);
    rep.d0 = Some(p.d0);
    let group = cover::x_lambda(&cov, &ty)?;
    rep.x_order = Some(group.order());
    match cover::whittaker_dim_closed(&cov, &ty) {
        Ok(v) => rep.dim_closed = Some(v),
        Err(e) => rep.notes.push(format!("dim_closed skipped: {e}")),
    }
    if group.order() > bound {
        rep.notes.push(format!("enumeration skipped: |X| = {} exceeds bound {bound}", group.order()));
    } else {
        rep.orbit_count = Some(group.orbits(bound)?.len() as u64);
        rep.dim_bruteforce = Some(group.burnside_count(bound)?);
        match hecke_dim(&cov, &ty, bound, q) {
            Ok(v) => rep.dim_hecke = Some(v),
            Err(e) => rep.notes.push(format!("dim_hecke skipped: {e}")),
        }
    }
    let computed: Vec<u64> =
        [rep.orbit_count, rep.dim_closed, rep.dim_bruteforce, rep.dim_hecke].into_iter().flatten().collect();
    if computed.len() >= 2 {
        rep.agree = Some(computed.windows(2).all(|w| w[0] == w[1]));
    }
    Ok(rep)
}

fn hecke_dim(cov: &CoverSpec, ty: &TypeSpec, bound: u64, q: Option<&BigRational>) -> Result<u64, AffineError> {
    let m = gg_module(cov, ty, bound)?;
    let d = match q {
        Some(q) => m.whittaker_dim_at(q)?,
        None => m.whittaker_dim()?,
    };
    Ok(d as u64)
}

/// A sweep row: either a report or the reason the point could not be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepRow {
    Report(DimReport),
    Failed(Params, String),
}

impl SweepRow {
    pub fn params(&self) -> &Params {
        match self {
            SweepRow::Report(r) => &r.params,
            SweepRow::Failed(p, _) => p,
        }
    }

    pub fn disagrees(&self) -> bool {
        matches!(self, SweepRow::Report(r) if r.disagrees())
    }

    pub fn csv_record(&self) -> Vec<String> {
        match self {
            SweepRow::Report(r) => r.csv_record(),
            SweepRow::Failed(p, _) => {
                let mut rec = vec![
                    p.kind.to_string(),
                    p.n.to_string(),
                    p.c.to_string(),
                    p.d.to_string(),
                    p.r.to_string(),
                    p.k.to_string(),
                    p.l0.to_string(),
                ];
                rec.resize(CSV_HEADER.len(), "NA".to_string());
                rec
            }
        }
    }
}

/// Evaluates every point in parallel; rows come back sorted by parameters.
pub fn sweep(mut points: Vec<Params>, bound: u64, q: Option<&BigRational>) -> Vec<SweepRow> {
    points.sort();
    points.dedup();
    points
        .par_iter()
        .map(|p| match dim_report(*p, bound, q) {
            Ok(r) => SweepRow::Report(r),
            Err(e) => SweepRow::Failed(*p, e.to_string()),
        })
        .collect()
}

pub fn write_csv<W: io::Write>(out: W, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kind: CoverKind, n: i64, c: i64, d: i64, r: i64, k: i64, l0: i64) -> Params {
        Params { kind, n, c, d, r, k, l0, f: 1 }
    }

    #[test]
    fn worked_kp_report() {
        let rep = dim_report(params(CoverKind::Kp, 4, 0, 1, 2, 2, 1), 1000, None).unwrap();
        assert_eq!((rep.n0, rep.d0, rep.x_order), (Some(4), Some(4), Some(16)));
        assert_eq!(rep.dim_closed, Some(10));
        assert_eq!(rep.dim_bruteforce, Some(10));
        assert_eq!(rep.dim_hecke, Some(10));
        assert_eq!(rep.agree, Some(true));
    }

    #[test]
    fn bound_marks_skipped_fields() {
        let rep = dim_report(params(CoverKind::Kp, 4, 0, 1, 2, 2, 1), 10, None).unwrap();
        assert_eq!(rep.orbit_count, None);
        assert_eq!(rep.agree, None);
        let rec = rep.csv_record();
        assert_eq!(rec[11], "NA");
        assert_eq!(rec[12], "10");
    }

    #[test]
    fn generic_cover_has_no_closed_form() {
        let rep = dim_report(params(CoverKind::Generic, 4, 1, 1, 2, 2, 1), 1000, None).unwrap();
        assert_eq!(rep.dim_closed, None);
        assert!(rep.orbit_count.is_some());
        assert_eq!(rep.orbit_count, rep.dim_bruteforce);
    }

    #[test]
    fn invalid_parameters_error() {
        assert!(dim_report(params(CoverKind::Kp, 4, 0, 1, 3, 2, 1), 1000, None).is_err());
        assert!(dim_report(params(CoverKind::Kp, 4, 0, 1, 2, 2, 3), 1000, None).is_err());
    }

    #[test]
    fn sweep_is_sorted() {
        let pts = vec![
            params(CoverKind::Savin, 4, -1, 2, 2, 2, 1),
            params(CoverKind::Kp, 2, 1, 1, 1, 1, 1),
            params(CoverKind::Kp, 2, 0, 1, 1, 1, 1),
        ];
        let rows = sweep(pts, 1000, None);
        let ns: Vec<(CoverKind, i64)> = rows.iter().map(|r| (r.params().kind, r.params().c)).collect();
        assert_eq!(ns, vec![(CoverKind::Kp, 0), (CoverKind::Kp, 1), (CoverKind::Savin, -1)]);
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(&CSV_HEADER.join(",")));
        assert_eq!(text.lines().count(), 4);
    }
}
