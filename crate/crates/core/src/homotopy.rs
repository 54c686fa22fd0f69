//! Recursive contractibility and sphere recognition for small graphs, with
//! replayable certificates, and checks that joins preserve both notions.
//!
//! Every graph met during the recursion is an induced subgraph of the input,
//! so verdicts are memoised by vertex subset.

use std::collections::HashMap;

use crate::complex::Label;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by the recognisers.
pub const MAX_VERTICES: usize = 12;

/// Outcome of classifying a graph through its clique complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyVerdict {
    pub contractible: bool,
    /// `Some(d)` when the graph is a `d`-sphere; the empty graph is the
    /// `(-1)`-sphere.
    pub sphere_dimension: Option<i32>,
    /// For a contractible graph: every vertex, in an order in which each one
    /// except the last has a contractible unit sphere when removed. For a
    /// sphere: one vertex followed by such an order for the rest.
    pub certificate: Vec<Label>,
}

impl HomotopyVerdict {
    pub fn is_sphere(&self) -> bool {
        self.sphere_dimension.is_some()
    }

    /// Re-checks the certificate against `g` step by step.
    pub fn replay(&self, g: &Graph) -> Result<bool> {
        let idx: Option<Vec<usize>> = self.certificate.iter().map(|l| g.index_of(l)).collect();
        let Some(idx) = idx else {
            return Ok(false);
        };
        if self.contractible {
            return replay_collapse(g, (1u32 << g.n()) - 1, &idx);
        }
        match self.sphere_dimension {
            Some(-1) => Ok(g.is_empty() && idx.is_empty()),
            Some(d) => {
                let Some((&first, rest)) = idx.split_first() else {
                    return Ok(false);
                };
                let full = (1u32 << g.n()) - 1;
                let chi = g.euler_characteristic();
                Ok(chi == 1 + if d % 2 == 0 { 1 } else { -1 }
                    && replay_collapse(g, full & !(1 << first), rest)?)
            }
            None => Ok(self.certificate.is_empty()),
        }
    }
}

fn replay_collapse(g: &Graph, mut mask: u32, order: &[usize]) -> Result<bool> {
    if order.len() != mask.count_ones() as usize || order.is_empty() {
        return Ok(false);
    }
    for &v in &order[..order.len() - 1] {
        if mask & (1 << v) == 0 {
            return Ok(false);
        }
        let sphere: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| mask & (1 << w) != 0).collect();
        if !is_contractible(&g.induced(&sphere))?.contractible {
            return Ok(false);
        }
        mask &= !(1 << v);
    }
    Ok(mask == 1 << order[order.len() - 1])
}

struct Classifier<'a> {
    g: &'a Graph,
    nbr: Vec<u32>,
    contractible: HashMap<u32, bool>,
    sphere: HashMap<u32, Option<i32>>,
}

impl<'a> Classifier<'a> {
    fn new(g: &'a Graph) -> Self {
        let nbr = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        Classifier {
            g,
            nbr,
            contractible: HashMap::new(),
            sphere: HashMap::new(),
        }
    }

    fn vertices(mask: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |v| mask >> v & 1 == 1)
    }

    /// A vertex whose unit sphere and complement are both contractible.
    fn collapse_vertex(&mut self, mask: u32) -> Option<usize> {
        Self::vertices(mask).find(|&v| {
            self.is_contractible(self.nbr[v] & mask) && self.is_contractible(mask & !(1 << v))
        })
    }

    fn is_contractible(&mut self, mask: u32) -> bool {
        match mask.count_ones() {
            0 => return false,
            1 => return true,
            _ => {}
        }
        if let Some(&r) = self.contractible.get(&mask) {
            return r;
        }
        let r = self.collapse_vertex(mask).is_some();
        self.contractible.insert(mask, r);
        r
    }

    fn sphere_dimension(&mut self, mask: u32) -> Option<i32> {
        if mask == 0 {
            return Some(-1);
        }
        if let Some(&r) = self.sphere.get(&mask) {
            return r;
        }
        let mut dim = None;
        let mut ok = true;
        for v in Self::vertices(mask) {
            let Some(d) = self.sphere_dimension(self.nbr[v] & mask) else {
                ok = false;
                break;
            };
            if dim.is_some_and(|e| e != d + 1) || !self.is_contractible(mask & !(1 << v)) {
                ok = false;
                break;
            }
            dim = Some(d + 1);
        }
        let r = if ok { dim } else { None };
        self.sphere.insert(mask, r);
        r
    }

    fn collapse_order(&mut self, mut mask: u32) -> Vec<usize> {
        let mut order = Vec::new();
        while mask.count_ones() > 1 {
            let v = self.collapse_vertex(mask).expect("contractible subgraph has a collapse vertex");
            order.push(v);
            mask &= !(1 << v);
        }
        order.extend(Self::vertices(mask));
        order
    }

    fn verdict(&mut self) -> HomotopyVerdict {
        let full = (1u32 << self.g.n()) - 1;
        let contractible = self.is_contractible(full);
        let sphere_dimension = self.sphere_dimension(full);
        let order = if contractible {
            self.collapse_order(full)
        } else if sphere_dimension.is_some_and(|d| d >= 0) {
            let mut order = vec![0];
            order.extend(self.collapse_order(full & !1));
            order
        } else {
            Vec::new()
        };
        HomotopyVerdict {
            contractible,
            sphere_dimension,
            certificate: order.into_iter().map(|v| self.g.label(v).clone()).collect(),
        }
    }
}

fn classify(g: &Graph) -> Result<HomotopyVerdict> {
    if g.n() > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph for homotopy recognition",
            dim: g.n(),
            max: MAX_VERTICES,
        });
    }
    Ok(Classifier::new(g).verdict())
}

/// Whether the clique complex of `g` is contractible: `K_1` is, the empty
/// graph is not, and otherwise some vertex has a contractible unit sphere
/// and leaves a contractible graph when removed.
pub fn is_contractible(g: &Graph) -> Result<HomotopyVerdict> {
    classify(g)
}

/// Whether the clique complex of `g` is a `d`-sphere: every unit sphere is a
/// `(d-1)`-sphere and removing any vertex leaves a contractible graph.
pub fn is_sphere(g: &Graph) -> Result<HomotopyVerdict> {
    classify(g)
}

/// One join that was re-certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinCase {
    pub left: String,
    pub right: String,
    pub expected: String,
    pub verdict: HomotopyVerdict,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JoinClosureReport {
    pub checked: Vec<JoinCase>,
    /// Pairs whose join exceeds [`MAX_VERTICES`].
    pub skipped: Vec<(String, String)>,
}

impl JoinClosureReport {
    pub fn violations(&self) -> impl Iterator<Item = &JoinCase> {
        self.checked.iter().filter(|c| !c.holds)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Joins every pair of certified pool members and checks that a
/// contractible factor gives a contractible join, and that two spheres of
/// dimensions `p` and `q` give a `(p+q+1)`-sphere. Members that are neither
/// are ignored.
pub fn join_closure_check(pool: &[(String, Graph)]) -> Result<JoinClosureReport> {
    let mut verdicts = Vec::with_capacity(pool.len());
    for (_, g) in pool {
        verdicts.push(classify(g)?);
    }
    let mut report = JoinClosureReport::default();
    for (i, (a_name, a)) in pool.iter().enumerate() {
        for (j, (b_name, b)) in pool.iter().enumerate().skip(i) {
            let (va, vb) = (&verdicts[i], &verdicts[j]);
            let expect_contractible = va.contractible || vb.contractible;
            let expect_sphere = match (va.sphere_dimension, vb.sphere_dimension) {
                (Some(p), Some(q)) => Some(p + q + 1),
                _ => None,
            };
            if !expect_contractible && expect_sphere.is_none() {
                continue;
            }
            if a.n() + b.n() > MAX_VERTICES {
                report.skipped.push((a_name.clone(), b_name.clone()));
                continue;
            }
            let verdict = classify(&a.join(b))?;
            let (expected, holds) = match expect_sphere {
                Some(d) => (format!("{d}-sphere"), verdict.sphere_dimension == Some(d) && !verdict.contractible),
                None if va.is_sphere() || vb.is_sphere() => {
                    ("contractible, not a sphere".to_string(), verdict.contractible && !verdict.is_sphere())
                }
                None => ("contractible".to_string(), verdict.contractible),
            };
            report.checked.push(JoinCase {
                left: a_name.clone(),
                right: b_name.clone(),
                expected,
                verdict,
                holds,
            });
        }
    }
    Ok(report)
}
