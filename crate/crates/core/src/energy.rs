//! Green functions of the connection Laplacian and the energy identities:
//! total energy, potentials, the Green star formula, diagonal entries, super
//! traces, the Wu characteristic and the bordered determinant `K(t)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::incidence::{connection_matrix, euler_on, sphere_indices, upper_indices};
use crate::linalg::{determinant, inverse_unimodular, IntMatrix};

/// The exact inverse `g = L^-1` of a connection Laplacian, together with the
/// complex that indexes its rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenMatrix {
    base: SimplicialComplex,
    g: IntMatrix,
}

impl GreenMatrix {
    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.g
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.g
    }

    pub fn entry(&self, x: &Simplex, y: &Simplex) -> Result<&BigInt> {
        Ok(self.g.get(self.base.require(x)?, self.base.require(y)?))
    }

    /// Row sum at `x`.
    pub fn potential(&self, x: &Simplex) -> Result<BigInt> {
        let i = self.base.require(x)?;
        Ok(self.g.row(i).iter().sum())
    }

    /// Sum of all entries.
    pub fn total(&self) -> BigInt {
        self.g.sum_entries()
    }

    /// `sum_x omega(x) g(x, x)`.
    pub fn super_trace(&self) -> BigInt {
        self.base
            .simplices()
            .iter()
            .enumerate()
            .map(|(i, x)| BigInt::from(x.omega()) * self.g.get(i, i))
            .sum()
    }
}

/// Inverts the connection Laplacian of a nonempty complex.
pub fn green_matrix(c: &SimplicialComplex) -> Result<GreenMatrix> {
    if c.is_empty() {
        return Err(Error::EmptySet);
    }
    let g = inverse_unimodular(&connection_matrix(c)).map_err(|e| match e {
        Error::NotUnimodular(m) => Error::Internal(format!("connection Laplacian not unimodular: {m}")),
        other => other,
    })?;
    Ok(GreenMatrix { base: c.clone(), g })
}

/// `E(G)`: the sum of all entries of `g`. Zero for the empty complex.
pub fn total_energy(c: &SimplicialComplex) -> Result<BigInt> {
    if c.is_empty() {
        return Ok(BigInt::zero());
    }
    Ok(green_matrix(c)?.total())
}

/// `V(x) = sum_y g(x, y)`.
pub fn potential(c: &SimplicialComplex, x: &Simplex) -> Result<BigInt> {
    c.require(x)?;
    green_matrix(c)?.potential(x)
}

/// `omega(x) omega(y) chi(W+(x) cap W+(y))`, computed from the stars alone.
pub fn green_star_entry(c: &SimplicialComplex, x: &Simplex, y: &Simplex) -> Result<i64> {
    let i = c.require(x)?;
    let j = c.require(y)?;
    Ok(green_star_at(c, i, j))
}

pub(crate) fn green_star_at(c: &SimplicialComplex, i: usize, j: usize) -> i64 {
    let (x, y) = (c.get(i), c.get(j));
    let u = x.union(y);
    let start = i.max(j);
    let chi: i64 = c.simplices()[start..]
        .iter()
        .filter(|z| u.is_subset_of(z))
        .map(Simplex::omega)
        .sum();
    x.omega() * y.omega() * chi
}

/// `str(L^-1) = sum_x omega(x) g(x, x)`.
pub fn super_trace_inverse(c: &SimplicialComplex) -> Result<BigInt> {
    Ok(green_matrix(c)?.super_trace())
}

/// `sum omega(x) omega(y)` over ordered intersecting pairs, self pairs
/// included.
pub fn wu_characteristic(c: &SimplicialComplex) -> i64 {
    let s = c.simplices();
    let mut w = 0;
    for x in s {
        for y in s {
            if x.intersects(y) {
                w += x.omega() * y.omega();
            }
        }
    }
    w
}

/// `chi(S(x))` for every simplex, in canonical order.
pub fn sphere_eulers(c: &SimplicialComplex) -> Vec<i64> {
    (0..c.len()).map(|i| euler_on(c, &sphere_indices(c, i))).collect()
}

/// `chi(S+(x))` for every simplex, where `S+(x)` holds the simplices
/// strictly containing `x`.
pub fn upper_sphere_eulers(c: &SimplicialComplex) -> Vec<i64> {
    (0..c.len()).map(|i| euler_on(c, &upper_indices(c, i))).collect()
}

/// The curvature vector `k(x) = 1 - chi(S+(x))`, which solves `L k = 1`.
pub fn upper_sphere_curvature(c: &SimplicialComplex) -> Vec<i64> {
    upper_sphere_eulers(c).into_iter().map(|e| 1 - e).collect()
}

/// `sum_x omega(x) chi(S(x))`, which vanishes for every complex.
pub fn signed_sphere_sum(c: &SimplicialComplex) -> i64 {
    c.simplices()
        .iter()
        .zip(sphere_eulers(c))
        .map(|(x, e)| x.omega() * e)
        .sum()
}

/// Determinants of the bordered matrix `K(t)` at `t = 0, 1, 2` when a facet
/// `x` is attached to the complex without it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionProfile {
    /// `det K(0)`, the determinant of the Laplacian without `x`.
    pub base_determinant: BigInt,
    /// `chi(A)` for the boundary `A` of `x`, recovered from the fit.
    pub boundary_euler: BigInt,
    /// `det K(t)` for `t = 0, 1, 2`.
    pub values: [BigInt; 3],
    /// Determinant of the connection Laplacian of the whole complex.
    pub full_determinant: BigInt,
}

impl ExtensionProfile {
    /// `det K(t) = alpha - beta t^2` fits all three values and `K(1)`
    /// agrees with the full Laplacian.
    pub fn is_consistent(&self) -> bool {
        let alpha = &self.values[0];
        let beta = alpha - &self.values[1];
        self.values[2] == alpha - BigInt::from(4) * &beta
            && self.values[1] == self.full_determinant
            && beta == alpha * &self.boundary_euler
    }
}

/// Evaluates `det K(t)` where `K(t)` is the connection Laplacian with the
/// facet `x` moved last and its row and column, except the corner, scaled by
/// `t`.
pub fn extension_determinant_profile(c: &SimplicialComplex, x: &Simplex) -> Result<ExtensionProfile> {
    c.require(x)?;
    if !c.is_facet(x) {
        return Err(Error::NotAFacet(x.to_string()));
    }
    let rest = c.without_facet(x)?;
    let n = rest.len();
    let border: Vec<BigInt> = rest
        .simplices()
        .iter()
        .map(|y| BigInt::from(y.intersects(x) as i64))
        .collect();
    let base = connection_matrix(&rest);
    let k_at = |t: i64| {
        IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i == n, j == n) {
            (true, true) => BigInt::one(),
            (true, false) => &border[j] * t,
            (false, true) => &border[i] * t,
            (false, false) => base.get(i, j).clone(),
        })
    };
    let values = [determinant(&k_at(0))?, determinant(&k_at(1))?, determinant(&k_at(2))?];
    let alpha = values[0].clone();
    let beta = &alpha - &values[1];
    if alpha.is_zero() || !(&beta % &alpha).is_zero() {
        return Err(Error::Internal(format!("det K(t) does not factor: alpha={alpha}, beta={beta}")));
    }
    let boundary_euler = &beta / &alpha;
    let full_determinant = determinant(&connection_matrix(c))?;
    Ok(ExtensionProfile {
        base_determinant: alpha,
        boundary_euler,
        values,
        full_determinant,
    })
}
