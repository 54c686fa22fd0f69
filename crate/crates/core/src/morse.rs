//! Poincare-Hopf indices and curvatures: index sums, Levitt curvature, index
//! expectation over vertex orders, the dual index identity, the parametrized
//! f-function identity and the multiplicative determinant trace along a
//! dimension-ordered build.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{Label, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::{
    connection_matrix, euler_on, lower_indices, sphere_indices, stable_sphere, unstable_sphere,
    SimplexFunction,
};
use crate::poly::IntPoly;

/// Largest vertex count for which [`index_expectation`] averages over every
/// vertex order instead of sampling.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 8;

/// Exact rational values attached to labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureVector {
    labels: Vec<Label>,
    values: Vec<BigRational>,
}

impl CurvatureVector {
    pub fn new(labels: Vec<Label>, values: Vec<BigRational>) -> Self {
        assert_eq!(labels.len(), values.len());
        CurvatureVector { labels, values }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, l: &Label) -> Option<&BigRational> {
        self.labels.iter().position(|x| x == l).map(|i| &self.values[i])
    }

    pub fn total(&self) -> BigRational {
        self.values.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigRational)> {
        self.labels.iter().zip(&self.values)
    }
}

fn check_vertex_function(g: &Graph, f: &[Rational64]) -> Result<()> {
    if f.len() != g.n() {
        return Err(Error::MissingValue(format!(
            "{} values for {} vertices",
            f.len(),
            g.n()
        )));
    }
    if let Some((a, b)) = g.edges().find(|&(a, b)| f[a] == f[b]) {
        return Err(Error::NotLocallyInjective(format!(
            "{} and {} share the value {}",
            g.label(a),
            g.label(b),
            f[a]
        )));
    }
    Ok(())
}

fn index_at(g: &Graph, f: &[Rational64], v: usize) -> i64 {
    let below: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| f[w] < f[v]).collect();
    1 - g.induced(&below).euler_characteristic()
}

/// `i_f(v) = 1 - chi(S^-_f(v))` for a vertex function `f` indexed like the
/// vertices of `g`.
pub fn ph_index(g: &Graph, f: &[Rational64], v: usize) -> Result<i64> {
    check_vertex_function(g, f)?;
    if v >= g.n() {
        return Err(Error::NotAMember(format!("vertex index {v}")));
    }
    Ok(index_at(g, f, v))
}

/// All indices `i_f(v)` in vertex order.
pub fn ph_indices(g: &Graph, f: &[Rational64]) -> Result<Vec<i64>> {
    check_vertex_function(g, f)?;
    Ok((0..g.n()).map(|v| index_at(g, f, v)).collect())
}

/// `sum_v i_f(v)`, which equals the Euler characteristic of the clique
/// complex.
pub fn ph_sum(g: &Graph, f: &[Rational64]) -> Result<i64> {
    Ok(ph_indices(g, f)?.into_iter().sum())
}

fn levitt_from_counts(counts: &[u64]) -> BigRational {
    let mut k = BigRational::one();
    for (i, &c) in counts.iter().enumerate() {
        let term = BigRational::new(BigInt::from(c), BigInt::from(i + 2));
        if i % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

/// `K(v) = 1 - V_0/2 + V_1/3 - V_2/4 + ...` where `V_k` counts the
/// `k`-simplices of the unit sphere of `v`.
pub fn levitt_curvature(g: &Graph, v: usize) -> Result<BigRational> {
    if v >= g.n() {
        return Err(Error::NotAMember(format!("vertex index {v}")));
    }
    Ok(levitt_from_counts(&g.unit_sphere(v).clique_counts()))
}

/// Levitt curvature at every vertex.
pub fn levitt_curvatures(g: &Graph) -> CurvatureVector {
    let values = (0..g.n())
        .map(|v| levitt_from_counts(&g.unit_sphere(v).clique_counts()))
        .collect();
    CurvatureVector::new(g.labels().to_vec(), values)
}

/// `omega(x) (1 - chi(S(x)))`.
pub fn sphere_curvature(c: &SimplicialComplex, x: &Simplex) -> Result<i64> {
    let i = c.require(x)?;
    Ok(x.omega() * (1 - euler_on(c, &sphere_indices(c, i))))
}

/// Sphere curvature at every simplex, in canonical order.
pub fn sphere_curvatures(c: &SimplicialComplex) -> Vec<i64> {
    c.simplices()
        .iter()
        .enumerate()
        .map(|(i, x)| x.omega() * (1 - euler_on(c, &sphere_indices(c, i))))
        .collect()
}

/// Index lookup per vertex keyed by which neighbours come earlier in the
/// order.
struct IndexTable {
    neighbors: Vec<Vec<usize>>,
    table: Vec<Vec<i64>>,
}

impl IndexTable {
    fn new(g: &Graph) -> Self {
        let neighbors: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        let table = neighbors
            .iter()
            .map(|nb| {
                (0..1usize << nb.len())
                    .map(|mask| {
                        let keep: Vec<usize> = (0..nb.len()).filter(|b| mask >> b & 1 == 1).map(|b| nb[b]).collect();
                        1 - g.induced(&keep).euler_characteristic()
                    })
                    .collect()
            })
            .collect();
        IndexTable { neighbors, table }
    }

    fn add_indices(&self, rank: &[usize], sums: &mut [i64]) {
        for (v, nb) in self.neighbors.iter().enumerate() {
            let mut mask = 0;
            for (b, &w) in nb.iter().enumerate() {
                if rank[w] < rank[v] {
                    mask |= 1 << b;
                }
            }
            sums[v] += self.table[v][mask];
        }
    }
}

/// Expected index `E[i_f(v)]` for `f` a uniformly random vertex order.
/// Graphs with at most [`EXHAUSTIVE_MAX_VERTICES`] vertices are averaged over
/// every order and `trials` is ignored; larger graphs are sampled with
/// `trials` orders, trial `k` drawing from stream `k` of a ChaCha generator
/// seeded with `seed`.
pub fn index_expectation(g: &Graph, trials: usize, seed: u64) -> Result<CurvatureVector> {
    let n = g.n();
    if n > EXHAUSTIVE_MAX_VERTICES && trials == 0 {
        return Err(Error::BadParams("at least one trial is needed".into()));
    }
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    if max_degree > 24 {
        return Err(Error::TooLarge {
            what: "vertex degree for index expectation",
            dim: max_degree,
            max: 24,
        });
    }
    let table = IndexTable::new(g);
    let mut sums = vec![0i64; n];
    let count: u64;
    if n <= EXHAUSTIVE_MAX_VERTICES {
        // Heap's algorithm over rank assignments
        let mut rank: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        table.add_indices(&rank, &mut sums);
        let mut total = 1u64;
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    rank.swap(0, i);
                } else {
                    rank.swap(c[i], i);
                }
                table.add_indices(&rank, &mut sums);
                total += 1;
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count = total;
    } else {
        let mut order: Vec<usize> = (0..n).collect();
        let mut rank = vec![0usize; n];
        for trial in 0..trials {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            order.sort_unstable();
            order.shuffle(&mut rng);
            for (r, &v) in order.iter().enumerate() {
                rank[v] = r;
            }
            table.add_indices(&rank, &mut sums);
        }
        count = trials as u64;
    }
    let values = sums
        .into_iter()
        .map(|s| BigRational::new(BigInt::from(s), BigInt::from(count)))
        .collect();
    Ok(CurvatureVector::new(g.labels().to_vec(), values))
}

/// The three indices at `x` for `f = dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualIndex {
    /// `i_f(x) = 1 - chi(S^-(x))`.
    pub stable: i64,
    /// `i_{-f}(x) = 1 - chi(S^+(x))`.
    pub unstable: i64,
    /// `i(x) = 1 - chi(S(x))`.
    pub full: i64,
}

impl DualIndex {
    pub fn holds(&self) -> bool {
        self.stable * self.unstable == self.full
    }
}

/// Computes `(i_f(x), i_{-f}(x), i(x))` independently. Only `f = dim` is
/// supported.
pub fn dual_index_check(c: &SimplicialComplex, f: &SimplexFunction, x: &Simplex) -> Result<DualIndex> {
    let i = c.require(x)?;
    if *f != SimplexFunction::dimension(c) {
        return Err(Error::Unsupported(
            "the dual index identity is only checked for the dimension function".into(),
        ));
    }
    Ok(DualIndex {
        stable: 1 - stable_sphere(c, x, f)?.euler_characteristic(),
        unstable: 1 - unstable_sphere(c, x, f)?.euler_characteristic(),
        full: 1 - euler_on(c, &sphere_indices(c, i)),
    })
}

/// `1 + f_0 t + f_1 t^2 + ...` for the clique complex of `g`.
pub fn graph_f_function(g: &Graph) -> IntPoly {
    IntPoly::new(std::iter::once(1u64).chain(g.clique_counts()))
}

/// Checks `f_G(t) = 1 + t sum_v f_{S^-(v)}(t)` as an exact polynomial
/// identity.
pub fn parametrized_ph_check(g: &Graph, f: &[Rational64]) -> Result<bool> {
    check_vertex_function(g, f)?;
    let mut rhs = IntPoly::zero();
    for v in 0..g.n() {
        let below: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| f[w] < f[v]).collect();
        rhs = &rhs + &graph_f_function(&g.induced(&below));
    }
    let rhs = &IntPoly::one() + &(&IntPoly::t() * &rhs);
    Ok(rhs == graph_f_function(g))
}

/// One simplex added during a dimension-ordered build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub simplex: Simplex,
    /// `1 - chi` of the boundary complex of the simplex.
    pub factor: i64,
    /// `det L_k / det L_{k-1}` obtained from the bordered inverse.
    pub ratio: i64,
    /// `det L_k` after this step.
    pub determinant: i64,
}

/// Adds the simplices of `c` in canonical order, tracking the determinant of
/// the connection Laplacian through the Schur complement of each new row.
/// Fails if a step's ratio differs from `1 - chi` of the simplex boundary.
pub fn multiplicative_ph_trace(c: &SimplicialComplex) -> Result<Vec<TraceStep>> {
    let n = c.len();
    let overflow = || Error::Internal("overflow in bordered inverse".into());
    // inverse of the leading k x k block, row-major with stride n
    let mut g = vec![0i64; n * n];
    let mut det = 1i64;
    let mut steps = Vec::with_capacity(n);
    let mut b = vec![0i64; n];
    let mut u = vec![0i64; n];
    for k in 0..n {
        let x = c.get(k);
        for j in 0..k {
            b[j] = c.get(j).intersects(x) as i64;
        }
        let mut btgb = 0i64;
        for i in 0..k {
            let mut acc = 0i64;
            for j in 0..k {
                if b[j] != 0 {
                    acc = acc.checked_add(g[i * n + j]).ok_or_else(overflow)?;
                }
            }
            u[i] = acc;
            if b[i] != 0 {
                btgb = btgb.checked_add(acc).ok_or_else(overflow)?;
            }
        }
        let s = 1 - btgb;
        if s != 1 && s != -1 {
            return Err(Error::Internal(format!("Schur complement {s} at {x} is not a unit")));
        }
        // bordered inverse: [[g + u u^T / s, -u / s], [-u^T / s, 1 / s]]
        for i in 0..k {
            for j in 0..k {
                let v = u[i].checked_mul(u[j]).ok_or_else(overflow)? * s;
                g[i * n + j] = g[i * n + j].checked_add(v).ok_or_else(overflow)?;
            }
            g[i * n + k] = -u[i] * s;
            g[k * n + i] = -u[i] * s;
        }
        g[k * n + k] = s;
        det *= s;
        let boundary = euler_on(c, &lower_indices(c, k));
        let factor = 1 - boundary;
        if factor != s {
            return Err(Error::Internal(format!(
                "determinant ratio {s} at {x} differs from 1 - chi(boundary) = {factor}"
            )));
        }
        steps.push(TraceStep {
            simplex: x.clone(),
            factor,
            ratio: s,
            determinant: det,
        });
    }
    debug_assert!(n == 0 || {
        let l = connection_matrix(c);
        (0..n).all(|i| (0..n).map(|j| BigInt::from(g[i * n + j]) * l.get(j, i)).sum::<BigInt>() == BigInt::one())
    });
    Ok(steps)
}
