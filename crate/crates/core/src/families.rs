//! Named complex families and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{whitney_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Family names understood by [`family`].
pub const FAMILIES: &[&str] = &[
    "point", "simplex", "cycle", "complete", "path", "wheel", "diamond", "octahedron", "random",
];

/// The complete complex on `n + 1` vertices.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::generate([(1..=n + 1).collect::<Vec<usize>>()]).expect("nonempty")
}

/// The 1-dimensional cycle complex `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle needs at least 3 vertices, got {n}")));
    }
    SimplicialComplex::generate((1..=n).map(|i| [i, i % n + 1]))
}

/// Whitney complex of the wheel with hub `0` and rim `1..=n`.
pub fn wheel(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::BadParams(format!("wheel needs a rim of at least 3, got {n}")));
    }
    Ok(whitney_complex(&Graph::wheel(n)))
}

/// The two triangles `{1,2,3}` and `{2,3,4}`.
pub fn diamond() -> SimplicialComplex {
    SimplicialComplex::generate([[1, 2, 3], [2, 3, 4]]).expect("nonempty")
}

/// Whitney complex of the octahedron graph on `1..=6`, antipodes `(1,2)`,
/// `(3,4)`, `(5,6)`.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [1, 2] {
        for b in [3, 4] {
            for c in [5, 6] {
                facets.push([a, b, c]);
            }
        }
    }
    SimplicialComplex::generate(facets).expect("nonempty")
}

/// Erdos-Renyi graph on `1..=n`: each edge present with probability `p`,
/// drawn from a ChaCha generator seeded with `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(1..=n, edges)
}

fn want(name: &str, params: &[f64], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::BadParams(format!(
            "{name} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn count(name: &str, v: f64) -> Result<usize> {
    if v < 0.0 || v.fract() != 0.0 || v > 64.0 {
        return Err(Error::BadParams(format!("{name}: expected a small nonnegative integer, got {v}")));
    }
    Ok(v as usize)
}

/// Builds a named family from numeric parameters.
pub fn family(name: &str, params: &[f64]) -> Result<SimplicialComplex> {
    match name {
        "point" | "k1" => {
            want(name, params, 0)?;
            Ok(SimplicialComplex::point())
        }
        "diamond" => {
            want(name, params, 0)?;
            Ok(diamond())
        }
        "octahedron" => {
            want(name, params, 0)?;
            Ok(octahedron())
        }
        "simplex" => {
            want(name, params, 1)?;
            Ok(simplex(count(name, params[0])?))
        }
        "cycle" => {
            want(name, params, 1)?;
            cycle(count(name, params[0])?)
        }
        "complete" | "path" => {
            want(name, params, 1)?;
            let n = count(name, params[0])?;
            if n == 0 {
                return Err(Error::BadParams(format!("{name} needs at least one vertex")));
            }
            let g = if name == "complete" { Graph::complete(n) } else { Graph::path(n) };
            Ok(whitney_complex(&g))
        }
        "wheel" => {
            want(name, params, 1)?;
            wheel(count(name, params[0])?)
        }
        "random" => {
            want(name, params, 3)?;
            let n = count(name, params[0])?;
            let seed = params[2];
            if seed < 0.0 || seed.fract() != 0.0 || seed >= u64::MAX as f64 {
                return Err(Error::BadParams(format!("random: seed must be a nonnegative integer, got {seed}")));
            }
            let seed = seed as u64;
            Ok(whitney_complex(&random_graph(n, params[1], seed)?))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}
