//! The per-complex report printed by `connlap report`, in human and JSON
//! form. Large integers are carried as decimal strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::energy::{green_matrix, upper_sphere_curvature, wu_characteristic};
use crate::error::{Error, Result};
use crate::incidence::connection_matrix;
use crate::linalg::{determinant, inertia, IntMatrix};
use crate::morse::sphere_curvatures;

/// Default cap on the number of simplices a report will handle.
pub const DEFAULT_MAX_N: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaRecord {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexRow {
    pub simplex: String,
    pub omega: i64,
    pub green_diagonal: String,
    pub potential: String,
    pub curvature: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A matrix in structured form: entries as decimal strings, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixRecord {
    pub fn new(name: &str, m: &IntMatrix) -> Self {
        MatrixRecord {
            name: name.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .flatten()
            .map(|s| s.parse::<BigInt>().map_err(|e| Error::Parse { line: 0, msg: e.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(self.rows, self.cols, entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub f_vector: Vec<u64>,
    pub dimension: Option<usize>,
    pub euler_characteristic: i64,
    pub fermi_characteristic: i64,
    pub determinant: String,
    pub total_energy: String,
    pub inertia: InertiaRecord,
    pub even_simplices: u64,
    pub odd_simplices: u64,
    pub wu_characteristic: i64,
    pub simplices: Vec<SimplexRow>,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixRecord>,
}

fn check(name: &str, passed: bool, detail: String) -> CheckRecord {
    CheckRecord {
        name: name.to_string(),
        passed,
        detail,
    }
}

impl Report {
    /// Computes every field, refusing complexes with more than `max_n`
    /// simplices.
    pub fn build(c: &SimplicialComplex, max_n: usize) -> Result<Report> {
        if c.len() > max_n {
            return Err(Error::TooLarge {
                what: "complex",
                dim: c.len(),
                max: max_n,
            });
        }
        let l = connection_matrix(c);
        let det = determinant(&l)?;
        let chi = c.euler_characteristic();
        let phi = c.fermi_characteristic();
        let inert = inertia(&l)?;
        let f = c.f_vector();
        let (even, odd) = (f.even(), f.odd());
        let (energy, rows, diag_ok) = if c.is_empty() {
            (BigInt::from(0), Vec::new(), true)
        } else {
            let g = green_matrix(c)?;
            let k = upper_sphere_curvature(c);
            let curv = sphere_curvatures(c);
            let mut rows = Vec::with_capacity(c.len());
            let mut ok = true;
            for (i, x) in c.simplices().iter().enumerate() {
                let v = g.potential(x)?;
                ok &= v == BigInt::from(k[i]) && curv[i] == k[i];
                rows.push(SimplexRow {
                    simplex: x.to_string(),
                    omega: x.omega(),
                    green_diagonal: g.matrix().get(i, i).to_string(),
                    potential: v.to_string(),
                    curvature: curv[i],
                });
            }
            (g.total(), rows, ok)
        };
        let checks = vec![
            check("unimodularity", det == BigInt::from(phi), format!("det L = {det}, phi = {phi}")),
            check("energy", energy == BigInt::from(chi), format!("E = {energy}, chi = {chi}")),
            check(
                "hearing",
                inert.positive as u64 == even && inert.negative as u64 == odd && inert.zero == 0,
                format!(
                    "p = {}, n = {}, even = {even}, odd = {odd}",
                    inert.positive, inert.negative
                ),
            ),
            check(
                "potential",
                diag_ok,
                "V(x) = omega(x) g(x,x) = 1 - chi(S+(x))".to_string(),
            ),
        ];
        Ok(Report {
            n: c.len(),
            f_vector: f.0.clone(),
            dimension: c.dimension(),
            euler_characteristic: chi,
            fermi_characteristic: phi,
            determinant: det.to_string(),
            total_energy: energy.to_string(),
            inertia: InertiaRecord {
                positive: inert.positive,
                negative: inert.negative,
                zero: inert.zero,
            },
            even_simplices: even,
            odd_simplices: odd,
            wu_characteristic: wu_characteristic(c),
            simplices: rows,
            checks,
            matrix: None,
        })
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Report> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let fv: Vec<String> = self.f_vector.iter().map(u64::to_string).collect();
        let dim = self.dimension.map_or("-1".to_string(), |d| d.to_string());
        let _ = writeln!(s, "simplices      {}", self.n);
        let _ = writeln!(s, "f-vector       ({})", fv.join(","));
        let _ = writeln!(s, "dimension      {dim}");
        let _ = writeln!(s, "euler          {}", self.euler_characteristic);
        let _ = writeln!(s, "fermi          {}", self.fermi_characteristic);
        let _ = writeln!(s, "det L          {}", self.determinant);
        let _ = writeln!(s, "energy         {}", self.total_energy);
        let _ = writeln!(
            s,
            "inertia        p={} n={} z={}",
            self.inertia.positive, self.inertia.negative, self.inertia.zero
        );
        let _ = writeln!(s, "wu             {}", self.wu_characteristic);
        if !self.simplices.is_empty() {
            let _ = writeln!(s);
            let width = self.simplices.iter().map(|r| r.simplex.len()).max().unwrap_or(0).max(7);
            let _ = writeln!(s, "{:<width$}  omega  g(x,x)  V(x)  k(x)", "simplex");
            for r in &self.simplices {
                let _ = writeln!(
                    s,
                    "{:<width$}  {:>5}  {:>6}  {:>4}  {:>4}",
                    r.simplex, r.omega, r.green_diagonal, r.potential, r.curvature
                );
            }
        }
        let _ = writeln!(s);
        for c in &self.checks {
            let _ = writeln!(s, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
        }
        if let Some(m) = &self.matrix {
            let _ = writeln!(s);
            let _ = writeln!(s, "{}:", m.name);
            let _ = write!(s, "{}", m.to_matrix().map(|m| m.to_text()).unwrap_or_default());
        }
        s
    }
}
