//! Graphs derived from a complex (Barycentric refinement graph, connection
//! graph) and the local structures around a simplex: unit spheres, their
//! stable and unstable halves, stars, cores and connection balls.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::complex::{whitney_complex, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// Containment graph `G_1`: simplices as vertices, an edge whenever one
/// contains the other.
pub fn barycentric_graph(c: &SimplicialComplex) -> Graph {
    let all: Vec<usize> = (0..c.len()).collect();
    containment_graph(c, &all)
}

/// Containment graph restricted to the simplices at `idx`.
pub(crate) fn containment_graph(c: &SimplicialComplex, idx: &[usize]) -> Graph {
    let mut g = Graph::with_labels(idx.iter().map(|&i| c.get(i).as_label()).collect());
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate().skip(a + 1) {
            let (x, y) = (c.get(i), c.get(j));
            if x.is_proper_subset_of(y) || y.is_proper_subset_of(x) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// The Barycentric refinement `G_1`: clique complex of the containment graph.
pub fn barycentric_refinement(c: &SimplicialComplex) -> SimplicialComplex {
    whitney_complex(&barycentric_graph(c))
}

/// Stirling numbers of the second kind `S(n, k)` for `0 <= n, k <= max`.
fn stirling2(max: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); max + 1]; max + 1];
    s[0][0] = BigInt::one();
    for n in 1..=max {
        for k in 1..=n {
            s[n][k] = BigInt::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

/// The `(d+1) x (d+1)` matrix with entry `i! S(j, i)` in row `i`, column
/// `j` (cardinalities, 1-based). It maps the f-vector of a complex of
/// dimension at most `d` to the f-vector of its Barycentric refinement.
pub fn stirling_refinement_operator(d: usize) -> IntMatrix {
    let s = stirling2(d + 1);
    let mut fact = BigInt::one();
    let mut factorials = vec![BigInt::one()];
    for i in 1..=d + 1 {
        fact *= i;
        factorials.push(fact.clone());
    }
    IntMatrix::from_fn(d + 1, d + 1, |r, c| &factorials[r + 1] * &s[c + 1][r + 1])
}

/// Connection graph `G'`: simplices as vertices, an edge between distinct
/// simplices that share a vertex.
pub fn connection_graph(c: &SimplicialComplex) -> Graph {
    let mut g = Graph::with_labels(c.simplices().iter().map(Simplex::as_label).collect());
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c.get(i).intersects(c.get(j)) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The connection Laplacian `L = 1 + A(G')` in canonical simplex order.
pub fn connection_matrix(c: &SimplicialComplex) -> IntMatrix {
    IntMatrix::from_fn(c.len(), c.len(), |i, j| {
        BigInt::from(c.get(i).intersects(c.get(j)) as i64)
    })
}

/// Indices of the simplices strictly contained in, or strictly containing,
/// the simplex at `i`.
pub(crate) fn sphere_indices(c: &SimplicialComplex, i: usize) -> Vec<usize> {
    let x = c.get(i);
    (0..c.len())
        .filter(|&j| {
            let y = c.get(j);
            y.is_proper_subset_of(x) || x.is_proper_subset_of(y)
        })
        .collect()
}

pub(crate) fn lower_indices(c: &SimplicialComplex, i: usize) -> Vec<usize> {
    let x = c.get(i);
    (0..i).filter(|&j| c.get(j).is_proper_subset_of(x)).collect()
}

pub(crate) fn upper_indices(c: &SimplicialComplex, i: usize) -> Vec<usize> {
    let x = c.get(i);
    (i + 1..c.len()).filter(|&j| x.is_proper_subset_of(c.get(j))).collect()
}

/// Euler characteristic of the clique complex on the containment graph
/// restricted to `idx`.
pub(crate) fn euler_on(c: &SimplicialComplex, idx: &[usize]) -> i64 {
    containment_graph(c, idx).euler_characteristic()
}

/// The unit sphere `S(x)` in `G_1`, as a complex whose vertices are the
/// simplices around `x`.
pub fn unit_sphere(c: &SimplicialComplex, x: &Simplex) -> Result<SimplicialComplex> {
    let i = c.require(x)?;
    Ok(whitney_complex(&containment_graph(c, &sphere_indices(c, i))))
}

/// `chi(S(x))` without materialising the sphere complex.
pub fn unit_sphere_euler(c: &SimplicialComplex, x: &Simplex) -> Result<i64> {
    let i = c.require(x)?;
    Ok(euler_on(c, &sphere_indices(c, i)))
}

/// `chi` of the part of `S(x)` made of simplices containing `x`.
pub fn upper_sphere_euler(c: &SimplicialComplex, x: &Simplex) -> Result<i64> {
    let i = c.require(x)?;
    Ok(euler_on(c, &upper_indices(c, i)))
}

/// `chi` of the part of `S(x)` made of faces of `x`: 0 or 2.
pub fn lower_sphere_euler(c: &SimplicialComplex, x: &Simplex) -> Result<i64> {
    let i = c.require(x)?;
    Ok(euler_on(c, &lower_indices(c, i)))
}

/// A rational-valued function on the simplices of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexFunction {
    values: BTreeMap<Simplex, Rational64>,
}

impl SimplexFunction {
    pub fn new(values: BTreeMap<Simplex, Rational64>) -> Self {
        SimplexFunction { values }
    }

    pub fn from_fn(c: &SimplicialComplex, f: impl Fn(&Simplex) -> Rational64) -> Self {
        SimplexFunction {
            values: c.simplices().iter().map(|s| (s.clone(), f(s))).collect(),
        }
    }

    /// `f = dim`.
    pub fn dimension(c: &SimplicialComplex) -> Self {
        Self::from_fn(c, |s| Rational64::from_integer(s.dim() as i64))
    }

    pub fn negated(&self) -> Self {
        SimplexFunction {
            values: self.values.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn get(&self, x: &Simplex) -> Result<Rational64> {
        self.values
            .get(x)
            .copied()
            .ok_or_else(|| Error::MissingValue(x.to_string()))
    }

    /// Checks that `f` is defined everywhere on `c` and differs across every
    /// edge of `G_1`.
    pub fn check_locally_injective(&self, c: &SimplicialComplex) -> Result<()> {
        let vals: Vec<Rational64> = c.simplices().iter().map(|s| self.get(s)).collect::<Result<_>>()?;
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if vals[i] == vals[j] && c.get(i).is_proper_subset_of(c.get(j)) {
                    return Err(Error::NotLocallyInjective(format!(
                        "{} and {} share the value {}",
                        c.get(i),
                        c.get(j),
                        vals[i]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_locally_injective(&self, c: &SimplicialComplex) -> bool {
        self.check_locally_injective(c).is_ok()
    }
}

fn half_sphere(
    c: &SimplicialComplex,
    x: &Simplex,
    f: &SimplexFunction,
    below: bool,
) -> Result<SimplicialComplex> {
    let i = c.require(x)?;
    f.check_locally_injective(c)?;
    let fx = f.get(x)?;
    let idx: Vec<usize> = sphere_indices(c, i)
        .into_iter()
        .filter(|&j| {
            let fy = f.values[c.get(j)];
            if below {
                fy < fx
            } else {
                fy > fx
            }
        })
        .collect();
    Ok(whitney_complex(&containment_graph(c, &idx)))
}

/// `S_f^-(x)`: the part of the unit sphere where `f < f(x)`.
pub fn stable_sphere(c: &SimplicialComplex, x: &Simplex, f: &SimplexFunction) -> Result<SimplicialComplex> {
    half_sphere(c, x, f, true)
}

/// `S_f^+(x)`: the part of the unit sphere where `f > f(x)`.
pub fn unstable_sphere(c: &SimplicialComplex, x: &Simplex, f: &SimplexFunction) -> Result<SimplicialComplex> {
    half_sphere(c, x, f, false)
}

/// The star `W+(x)`: every simplex containing `x`, `x` included. Not a
/// complex in general.
pub fn star(c: &SimplicialComplex, x: &Simplex) -> Result<Vec<Simplex>> {
    let i = c.require(x)?;
    Ok(c.simplices()[i..].iter().filter(|y| x.is_subset_of(y)).cloned().collect())
}

/// The core `W-(x)`: the complete complex on the vertices of `x`.
pub fn core(c: &SimplicialComplex, x: &Simplex) -> Result<SimplicialComplex> {
    c.require(x)?;
    SimplicialComplex::generate([x.vertices().to_vec()])
}

/// Degree of `x` in the connection graph.
pub fn connection_ball_degree(c: &SimplicialComplex, x: &Simplex) -> Result<usize> {
    c.require(x)?;
    Ok(c.simplices().iter().filter(|y| *y != x && y.intersects(x)).count())
}
