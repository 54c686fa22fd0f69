//! Verification suites run by `connlap verify`: pools of complexes and the
//! identity checks run over them.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{disjoint_union, graphic_matroid, strip_tag, whitney_complex, zykov_join, SimplicialComplex};
use crate::energy::{
    extension_determinant_profile, green_matrix, green_star_at, signed_sphere_sum, sphere_eulers,
    total_energy, upper_sphere_curvature, upper_sphere_eulers,
};
use crate::error::{Error, Result};
use crate::facets::parse_pool_file;
use crate::families;
use crate::graph::Graph;
use crate::homotopy::{self, join_closure_check};
use crate::incidence::{
    barycentric_graph, barycentric_refinement, connection_graph, connection_matrix, stable_sphere,
    stirling_refinement_operator, unit_sphere, unstable_sphere, SimplexFunction,
};
use crate::linalg::{
    determinant, fredholm_path_oracle, inertia, permanent, permutation_expansion_determinant, tensor_product,
    IntMatrix,
};
use crate::morse::{
    dual_index_check, index_expectation, levitt_curvatures, multiplicative_ph_trace, parametrized_ph_check,
    ph_sum, sphere_curvatures, EXHAUSTIVE_MAX_VERTICES,
};
use crate::ring::{product_cells, ring_energy, ring_energy_via_inverse, ring_spectrum_check, strong_product, RingExpr};

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "unimodularity",
    "energy",
    "hearing",
    "green-star",
    "diagonal",
    "poincare-hopf",
    "gauss-bonnet",
    "unit-ball",
    "joins",
    "ring",
    "paths",
    "mult-ph",
    "all",
];

/// Default cap on the simplex count of pool members; larger ones are skipped.
pub const DEFAULT_VERIFY_MAX_N: usize = 255;

/// Random injective functions drawn per graph in the Poincare-Hopf suite.
pub const PH_FUNCTIONS_PER_GRAPH: usize = 20;

/// Random pool members added to the named fixtures by `--pool small`.
pub const RANDOM_POOL_SIZE: usize = 54;

const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];
const RING_PAIRS: usize = 24;
const CERTIFIED_JOIN_MEMBERS: usize = 8;
const SPECTRUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolEntry {
    pub name: String,
    pub complex: SimplicialComplex,
}

impl PoolEntry {
    pub fn new(name: impl Into<String>, complex: SimplicialComplex) -> Self {
        PoolEntry {
            name: name.into(),
            complex,
        }
    }

    /// The facet list as `{1,2,3} {2,3,4}`.
    pub fn facet_list(&self) -> String {
        let fs: Vec<String> = self
            .complex
            .facets()
            .iter()
            .map(|f| {
                let v: Vec<&str> = f.vertices().iter().map(|l| l.as_str()).collect();
                format!("{{{}}}", v.join(","))
            })
            .collect();
        if fs.is_empty() {
            "{}".to_string()
        } else {
            fs.join(" ")
        }
    }

    /// The graph used by vertex-based suites: the 1-skeleton when the
    /// complex is its clique complex, otherwise the Barycentric graph.
    pub fn graph(&self) -> Graph {
        let skeleton = one_skeleton(&self.complex);
        if whitney_complex(&skeleton) == self.complex {
            skeleton
        } else {
            barycentric_graph(&self.complex)
        }
    }
}

pub fn one_skeleton(c: &SimplicialComplex) -> Graph {
    let edges: Vec<_> = c
        .simplices()
        .iter()
        .filter(|s| s.len() == 2)
        .map(|s| (s.vertices()[0].clone(), s.vertices()[1].clone()))
        .collect();
    Graph::new(c.vertices(), edges).expect("edges of a complex join its vertices")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoolSpec {
    Named,
    Small,
    File(PathBuf),
}

impl FromStr for PoolSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "named" => Ok(PoolSpec::Named),
            "small" => Ok(PoolSpec::Small),
            _ => match s.strip_prefix("file:") {
                Some(p) if !p.is_empty() => Ok(PoolSpec::File(PathBuf::from(p))),
                _ => Err(Error::BadParams(format!(
                    "unknown pool `{s}`; expected small, named or file:<path>"
                ))),
            },
        }
    }
}

impl fmt::Display for PoolSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoolSpec::Named => f.write_str("named"),
            PoolSpec::Small => f.write_str("small"),
            PoolSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn gen(sets: &[&[i32]]) -> SimplicialComplex {
    SimplicialComplex::generate(sets.iter().map(|s| s.to_vec())).expect("fixture")
}

/// The kite graph: two triangles sharing the edge `2-3`.
pub fn kite_graph() -> Graph {
    Graph::from_edges([(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
}

/// Hand-picked fixtures, small enough for every suite.
pub fn named_fixtures() -> Vec<PoolEntry> {
    vec![
        PoolEntry::new("point", SimplicialComplex::point()),
        PoolEntry::new("K2", families::simplex(1)),
        PoolEntry::new("P2", gen(&[&[1], &[2]])),
        PoolEntry::new("path3", gen(&[&[1, 2], &[2, 3]])),
        PoolEntry::new("C3", families::cycle(3).expect("fixture")),
        PoolEntry::new("K3", families::simplex(2)),
        PoolEntry::new("diamond", families::diamond()),
        PoolEntry::new("kite-matroid", graphic_matroid(&kite_graph())),
        PoolEntry::new(
            "mixed",
            gen(&[&[1, 3, 6], &[1, 4, 5], &[2, 5], &[1], &[2], &[3], &[4], &[5], &[6]]),
        ),
        PoolEntry::new("tetrahedron", families::simplex(3)),
        PoolEntry::new("W4", families::wheel(4).expect("fixture")),
        PoolEntry::new("C4", families::cycle(4).expect("fixture")),
        PoolEntry::new("octahedron", families::octahedron()),
    ]
}

/// Seeded Erdos-Renyi clique complexes on 3 to 8 vertices with edge
/// probabilities 0.3, 0.5 and 0.7.
pub fn random_fixtures(seed: u64, count: usize) -> Vec<PoolEntry> {
    (0..count)
        .map(|i| {
            let n = 3 + (i / EDGE_PROBABILITIES.len()) % 6;
            let p = EDGE_PROBABILITIES[i % EDGE_PROBABILITIES.len()];
            let s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64);
            let g = families::random_graph(n, p, s).expect("valid probability");
            PoolEntry::new(format!("random-{i}(n={n},p={p})"), whitney_complex(&g))
        })
        .collect()
}

pub fn build_pool(spec: &PoolSpec, seed: u64) -> Result<Vec<PoolEntry>> {
    match spec {
        PoolSpec::Named => Ok(named_fixtures()),
        PoolSpec::Small => {
            let mut pool = named_fixtures();
            pool.extend(random_fixtures(seed, RANDOM_POOL_SIZE));
            Ok(pool)
        }
        PoolSpec::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::BadParams(format!("cannot read {}: {e}", path.display())))?;
            Ok(parse_pool_file(&text)?
                .into_iter()
                .enumerate()
                .map(|(i, c)| PoolEntry::new(format!("file-{i}"), c))
                .collect())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

/// One line of a suite log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub suite: &'static str,
    pub check: &'static str,
    pub subject: String,
    pub outcome: Outcome,
    pub detail: String,
    /// Facet list of the complex, cited on failures.
    pub facets: Option<String>,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "ok  ",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "skip",
        };
        write!(f, "{tag} {}/{} {}: {}", self.suite, self.check, self.subject, self.detail)?;
        if self.outcome == Outcome::Fail {
            if let Some(facets) = &self.facets {
                write!(f, " [facets {facets}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteLog {
    pub lines: Vec<CheckLine>,
}

impl SuiteLog {
    pub fn passed(&self) -> usize {
        self.count(Outcome::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Outcome::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Outcome::Skip)
    }

    fn count(&self, o: Outcome) -> usize {
        self.lines.iter().filter(|l| l.outcome == o).count()
    }

    pub fn is_clean(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| l.outcome == Outcome::Fail)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} passed, {} failed, {} skipped",
            self.passed(),
            self.failed(),
            self.skipped()
        )
    }
}

struct Runner<'a> {
    suite: &'static str,
    log: &'a mut SuiteLog,
}

impl Runner<'_> {
    fn record(&mut self, check: &'static str, subject: &str, facets: Option<String>, r: Result<(bool, String)>) {
        let (outcome, detail) = match r {
            Ok((true, d)) => (Outcome::Pass, d),
            Ok((false, d)) => (Outcome::Fail, d),
            Err(e) => (Outcome::Fail, format!("error: {e}")),
        };
        self.log.lines.push(CheckLine {
            suite: self.suite,
            check,
            subject: subject.to_string(),
            outcome,
            detail,
            facets,
        });
    }

    fn on(&mut self, check: &'static str, e: &PoolEntry, r: Result<(bool, String)>) {
        self.record(check, &e.name, Some(e.facet_list()), r);
    }

    fn plain(&mut self, check: &'static str, subject: &str, r: Result<(bool, String)>) {
        self.record(check, subject, None, r);
    }

    fn skip(&mut self, check: &'static str, subject: &str, why: String) {
        self.log.lines.push(CheckLine {
            suite: self.suite,
            check,
            subject: subject.to_string(),
            outcome: Outcome::Skip,
            detail: why,
            facets: None,
        });
    }
}

/// Runs one suite, or every suite for `all`, and returns its log.
pub fn run_suite(suite: &str, pool: &[PoolEntry], seed: u64, max_n: usize) -> Result<SuiteLog> {
    let mut log = SuiteLog::default();
    let names: Vec<&'static str> = match SUITES.iter().find(|s| **s == suite) {
        Some(&"all") => SUITES.iter().copied().filter(|s| *s != "all").collect(),
        Some(s) => vec![*s],
        None => {
            return Err(Error::BadParams(format!(
                "unknown suite `{suite}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    let (fits, too_big): (Vec<&PoolEntry>, Vec<&PoolEntry>) = pool.iter().partition(|e| e.complex.len() <= max_n);
    let fits: Vec<PoolEntry> = fits.into_iter().cloned().collect();
    for name in names {
        let mut r = Runner { suite: name, log: &mut log };
        for e in &too_big {
            r.skip("size", &e.name, format!("{} simplices exceed --max-n {max_n}", e.complex.len()));
        }
        match name {
            "unimodularity" => unimodularity(&mut r, &fits),
            "energy" => energy(&mut r, &fits),
            "hearing" => hearing(&mut r, &fits),
            "green-star" => green_star(&mut r, &fits),
            "diagonal" => diagonal(&mut r, &fits),
            "poincare-hopf" => poincare_hopf(&mut r, &fits, seed),
            "gauss-bonnet" => gauss_bonnet(&mut r, &fits),
            "unit-ball" => unit_ball(&mut r, &fits),
            "joins" => joins(&mut r, &fits, max_n),
            "ring" => ring(&mut r, &fits, max_n),
            "paths" => paths(&mut r, &fits),
            "mult-ph" => mult_ph(&mut r, &fits),
            _ => unreachable!("suite list is exhaustive"),
        }
    }
    Ok(log)
}

fn nonempty(pool: &[PoolEntry]) -> impl Iterator<Item = &PoolEntry> {
    pool.iter().filter(|e| !e.complex.is_empty())
}

fn unimodularity(r: &mut Runner, pool: &[PoolEntry]) {
    for e in pool {
        r.on("det-fermi", e, (|| {
            let det = determinant(&connection_matrix(&e.complex))?;
            let phi = e.complex.fermi_characteristic();
            Ok((det == BigInt::from(phi), format!("det L = {det}, phi = {phi}")))
        })());
    }
}

fn energy(r: &mut Runner, pool: &[PoolEntry]) {
    for e in pool {
        r.on("total", e, (|| {
            let en = total_energy(&e.complex)?;
            let chi = e.complex.euler_characteristic();
            Ok((en == BigInt::from(chi), format!("{en} = {chi}")))
        })());
    }
}

fn hearing(r: &mut Runner, pool: &[PoolEntry]) {
    for e in pool {
        r.on("inertia", e, (|| {
            let i = inertia(&connection_matrix(&e.complex))?;
            let f = e.complex.f_vector();
            let ok = i.positive as u64 == f.even() && i.negative as u64 == f.odd() && i.zero == 0;
            Ok((
                ok,
                format!("(p,n) = ({},{}), (b,f) = ({},{})", i.positive, i.negative, f.even(), f.odd()),
            ))
        })());
    }
}

fn green_star(r: &mut Runner, pool: &[PoolEntry]) {
    for e in nonempty(pool) {
        let c = &e.complex;
        let g = match green_matrix(c) {
            Ok(g) => g,
            Err(err) => {
                r.on("pairs", e, Err(err));
                continue;
            }
        };
        let n = c.len();
        let mut bad = None;
        'outer: for i in 0..n {
            for j in 0..n {
                if *g.matrix().get(i, j) != BigInt::from(green_star_at(c, i, j)) {
                    bad = Some((i, j));
                    break 'outer;
                }
            }
        }
        let detail = match bad {
            None => format!("{} entries agree", n * n),
            Some((i, j)) => format!(
                "g{}{} = {}, star formula gives {}",
                c.get(i),
                c.get(j),
                g.matrix().get(i, j),
                green_star_at(c, i, j)
            ),
        };
        r.on("pairs", e, Ok((bad.is_none(), detail)));
        let mut facet_ok = true;
        let mut count = 0;
        for x in c.facets() {
            let xi = c.index_of(&x).expect("facet is a member");
            for (yi, y) in c.simplices().iter().enumerate() {
                if y.is_subset_of(&x) {
                    count += 1;
                    facet_ok &= *g.matrix().get(yi, xi) == BigInt::from(y.omega());
                }
            }
        }
        r.on("facet-minor", e, Ok((facet_ok, format!("g(y,x) = omega(y) on {count} face pairs"))));
    }
}

fn diagonal(r: &mut Runner, pool: &[PoolEntry]) {
    for e in nonempty(pool) {
        let c = &e.complex;
        let chi = c.euler_characteristic();
        r.on("green-diagonal", e, (|| {
            let g = green_matrix(c)?;
            let s = sphere_eulers(c);
            let bad = (0..c.len()).find(|&i| *g.matrix().get(i, i) != BigInt::from(1 - s[i]));
            let st = g.super_trace();
            let ok = bad.is_none() && st == BigInt::from(chi);
            let detail = match bad {
                Some(i) => format!("g(x,x) = {} but 1 - chi(S(x)) = {} at {}", g.matrix().get(i, i), 1 - s[i], c.get(i)),
                None => format!("g(x,x) = 1 - chi(S(x)) on {} simplices; str(g) = {st} = {chi}", c.len()),
            };
            Ok((ok, detail))
        })());
        let bal = signed_sphere_sum(c);
        r.on("balance", e, Ok((bal == 0, format!("sum omega chi(S) = {bal}"))));
    }
}

fn random_injective(n: usize, rng: &mut ChaCha8Rng) -> Vec<Rational64> {
    let mut v: Vec<i64> = (0..n as i64).collect();
    v.shuffle(rng);
    v.into_iter().map(Rational64::from_integer).collect()
}

fn poincare_hopf(r: &mut Runner, pool: &[PoolEntry], seed: u64) {
    for (k, e) in pool.iter().enumerate() {
        let g = e.graph();
        let chi = g.euler_characteristic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        r.on("index-sum", e, (|| {
            let mut ok = true;
            for _ in 0..PH_FUNCTIONS_PER_GRAPH {
                let f = random_injective(g.n(), &mut rng);
                ok &= ph_sum(&g, &f)? == chi && parametrized_ph_check(&g, &f)?;
            }
            Ok((
                ok,
                format!("{PH_FUNCTIONS_PER_GRAPH} functions, index sum and f-function identity, chi = {chi}"),
            ))
        })());
        if g.n() <= EXHAUSTIVE_MAX_VERTICES {
            r.on("expectation", e, (|| {
                let ex = index_expectation(&g, 0, seed)?;
                let lev = levitt_curvatures(&g);
                Ok((ex == lev, format!("exhaustive index expectation over {} vertices", g.n())))
            })());
        }
    }
}

fn gauss_bonnet(r: &mut Runner, pool: &[PoolEntry]) {
    for e in pool {
        let c = &e.complex;
        let chi = c.euler_characteristic();
        let g = e.graph();
        let lev = levitt_curvatures(&g).total();
        r.on(
            "levitt",
            e,
            Ok((lev == num_rational::BigRational::from_integer(BigInt::from(chi)), format!("sum K = {lev}, chi = {chi}"))),
        );
        let sc: i64 = sphere_curvatures(c).iter().sum();
        r.on("sphere", e, Ok((sc == chi, format!("sum omega (1 - chi(S)) = {sc}, chi = {chi}"))));
        let b = barycentric_refinement(c);
        let bchi = b.euler_characteristic();
        r.on("refinement", e, (|| {
            let d = c.dimension().unwrap_or(0);
            let a = stirling_refinement_operator(d);
            let mut f: Vec<BigInt> = c.f_vector().0.iter().map(|&x| BigInt::from(x)).collect();
            f.resize(d + 1, BigInt::zero());
            let mut fb: Vec<BigInt> = b.f_vector().0.iter().map(|&x| BigInt::from(x)).collect();
            fb.resize(d + 1, BigInt::zero());
            let ok = bchi == chi && a.mul_vec(&f)? == fb;
            Ok((ok, format!("chi(G1) = {bchi}, f(G1) = A f(G)")))
        })());
    }
}

fn unit_ball(r: &mut Runner, pool: &[PoolEntry]) {
    for e in nonempty(pool) {
        let c = &e.complex;
        let l = connection_matrix(c);
        r.on("curvature-solves", e, (|| {
            let k: Vec<BigInt> = upper_sphere_curvature(c).into_iter().map(BigInt::from).collect();
            let lk = l.mul_vec(&k)?;
            Ok((lk.iter().all(BigInt::is_one), "L k = 1".to_string()))
        })());
        let up = upper_sphere_eulers(c);
        let bad = (0..c.len()).find(|&i| {
            let x = c.get(i);
            let ball: i64 = (0..c.len()).filter(|&j| c.get(j).intersects(x)).map(|j| up[j]).sum();
            let degree = c.simplices().iter().filter(|y| *y != x && y.intersects(x)).count() as i64;
            ball != degree
        });
        r.on(
            "degree",
            e,
            Ok((
                bad.is_none(),
                match bad {
                    None => "d(x) = sum over B(x) of chi(S+(y))".to_string(),
                    Some(i) => format!("fails at {}", c.get(i)),
                },
            )),
        );
    }
}

fn joins(r: &mut Runner, pool: &[PoolEntry], max_n: usize) {
    // hyperbolic structure and dual index for f = dim
    for e in pool {
        let c = &e.complex;
        r.on("hyperbolic", e, (|| {
            let f = SimplexFunction::dimension(c);
            let mut ok = true;
            for x in c.simplices() {
                let joined = zykov_join(&stable_sphere(c, x, &f)?, &unstable_sphere(c, x, &f)?);
                ok &= joined.relabel(strip_tag) == unit_sphere(c, x)?;
                ok &= dual_index_check(c, &f, x)?.holds();
            }
            Ok((ok, "S(x) = S-(x) + S+(x) and i_f i_-f = i".to_string()))
        })());
    }
    // genus product over pairs
    let small: Vec<&PoolEntry> = pool.iter().filter(|e| e.complex.len() <= 16).take(12).collect();
    for (i, a) in small.iter().enumerate() {
        for b in small.iter().skip(i) {
            let subject = format!("{} + {}", a.name, b.name);
            if (a.complex.len() + 1) * (b.complex.len() + 1) > max_n.max(1) * 4 {
                r.skip("genus", &subject, "join too large".into());
                continue;
            }
            let j = zykov_join(&a.complex, &b.complex);
            let (ga, gb, gj) = (a.complex.genus(), b.complex.genus(), j.genus());
            r.plain("genus", &subject, Ok((gj == ga * gb, format!("{gj} = {ga} * {gb}"))));
        }
    }
    // homotopy recognition
    let spheres = [
        ("empty", Graph::edgeless(0), -1),
        ("P2", Graph::edgeless(2), 0),
        ("P2+P2", Graph::edgeless(2).join(&Graph::edgeless(2)), 1),
        ("P2+P2+P2", Graph::edgeless(2).join(&Graph::edgeless(2)).join(&Graph::edgeless(2)), 2),
    ];
    for (name, g, d) in &spheres {
        r.plain("sphere", name, (|| {
            let v = homotopy::is_sphere(g)?;
            Ok((
                v.sphere_dimension == Some(*d) && v.replay(g)?,
                format!("dimension {:?}, expected {d}", v.sphere_dimension),
            ))
        })());
    }
    let mut certified: Vec<(String, Graph)> = spheres
        .iter()
        .take(2)
        .map(|(n, g, _)| (n.to_string(), g.clone()))
        .collect();
    for e in pool {
        let g = e.graph();
        if g.n() > homotopy::MAX_VERTICES {
            r.skip("certify", &e.name, format!("{} vertices exceed {}", g.n(), homotopy::MAX_VERTICES));
            continue;
        }
        let v = match homotopy::is_contractible(&g) {
            Ok(v) => v,
            Err(err) => {
                r.on("certify", e, Err(err));
                continue;
            }
        };
        let chi = g.euler_characteristic();
        if v.contractible {
            r.on("contractible-chi", e, Ok((chi == 1, format!("contractible with chi = {chi}"))));
        }
        if let Some(d) = v.sphere_dimension {
            let expect = 1 + if d % 2 == 0 { 1 } else { -1 };
            r.on("sphere-chi", e, Ok((chi == expect, format!("{d}-sphere with chi = {chi}"))));
            let refined = barycentric_graph(&whitney_complex(&g));
            if refined.n() <= homotopy::MAX_VERTICES {
                r.on("sphere-refined", e, (|| {
                    let w = homotopy::is_sphere(&refined)?;
                    Ok((w.sphere_dimension == Some(d), format!("refinement is a {:?}-sphere", w.sphere_dimension)))
                })());
            }
        }
        let replay = v.replay(&g);
        r.on("certificate", e, replay.map(|ok| (ok, "certificate replays".to_string())));
        if (v.contractible || v.is_sphere()) && g.n() <= 6 && certified.len() < CERTIFIED_JOIN_MEMBERS {
            certified.push((e.name.clone(), g));
        }
    }
    match join_closure_check(&certified) {
        Ok(rep) => {
            for case in &rep.checked {
                r.plain(
                    "join-closure",
                    &format!("{} + {}", case.left, case.right),
                    Ok((case.holds, format!("expected {}", case.expected))),
                );
            }
            for (a, b) in &rep.skipped {
                r.skip("join-closure", &format!("{a} + {b}"), "join exceeds the vertex guard".into());
            }
        }
        Err(err) => r.plain("join-closure", "certified pool", Err(err)),
    }
}

fn ring(r: &mut Runner, pool: &[PoolEntry], max_n: usize) {
    let members: Vec<&PoolEntry> = nonempty(pool).collect();
    let mut pairs = Vec::new();
    'outer: for (i, a) in members.iter().enumerate() {
        for b in members.iter().skip(i) {
            if a.complex.len() * b.complex.len() <= max_n.min(150) {
                pairs.push((*a, *b));
                if pairs.len() == RING_PAIRS {
                    break 'outer;
                }
            }
        }
    }
    for (a, b) in pairs {
        let subject = format!("{} x {}", a.name, b.name);
        let (ea, eb) = (RingExpr::complex(&a.complex), RingExpr::complex(&b.complex));
        r.plain("product-energy", &subject, (|| {
            let prod = ring_energy_via_inverse(&ea.mul(&eb), usize::MAX)?;
            let (x, y) = (total_energy(&a.complex)?, total_energy(&b.complex)?);
            let ok = prod == &x * &y && ring_energy(&ea.mul(&eb)) == prod;
            Ok((ok, format!("E = {prod}, E(a) E(b) = {}", &x * &y)))
        })());
        r.plain("sum-energy", &subject, (|| {
            let u = total_energy(&disjoint_union(&a.complex, &b.complex))?;
            let (x, y) = (total_energy(&a.complex)?, total_energy(&b.complex)?);
            Ok((u == &x + &y && ring_energy(&ea.add(&eb)) == u, format!("E = {u}, E(a) + E(b) = {}", &x + &y)))
        })());
        r.plain("strong-product", &subject, {
            let cells = product_cells(&a.complex, &b.complex);
            let strong = strong_product(&connection_graph(&a.complex), &connection_graph(&b.complex));
            let tensor = tensor_product(&connection_matrix(&a.complex), &connection_matrix(&b.complex));
            let ok = cells.connection_graph() == strong && cells.connection_matrix() == tensor;
            Ok((ok, format!("{} cells", cells.len())))
        });
        r.plain("spectrum", &subject, (|| {
            let s = ring_spectrum_check(&a.complex, &b.complex)?;
            Ok((
                s.within(SPECTRUM_TOLERANCE),
                format!("product error {:.1e}, union error {:.1e}", s.product_error, s.union_error),
            ))
        })());
    }
}

fn complete_adjacency(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| BigInt::from((i != j) as i64))
}

/// `per(1 + A(K_n))` and `per(A(K_n))` for `n = 1..=6`.
pub fn complete_graph_permanents() -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let mut with_one = Vec::new();
    let mut bare = Vec::new();
    for n in 1..=6 {
        let a = complete_adjacency(n);
        with_one.push(permanent(&a.add(&IntMatrix::identity(n))?)?);
        bare.push(permanent(&a)?);
    }
    Ok((with_one, bare))
}

fn paths(r: &mut Runner, pool: &[PoolEntry]) {
    r.plain("permanents", "K1..K6", (|| {
        let (w, b) = complete_graph_permanents()?;
        let ok = w == [1, 2, 6, 24, 120, 720].map(BigInt::from) && b == [0, 1, 2, 9, 44, 265].map(BigInt::from);
        let show = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
        Ok((ok, format!("per(1+A) = ({}), per(A) = ({})", show(&w), show(&b))))
    })());
    for e in pool {
        let n = e.complex.len();
        if n > crate::linalg::PERMUTATION_ORACLE_MAX_DIM {
            continue;
        }
        r.on("fredholm", e, (|| {
            let l = connection_matrix(&e.complex);
            let a = IntMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    BigInt::zero()
                } else {
                    l.get(i, j).clone()
                }
            });
            let det = determinant(&l)?;
            let ok = fredholm_path_oracle(&a)? == det && permutation_expansion_determinant(&l)? == det;
            Ok((ok, format!("det(1+A) = {det} by paths and by permutations")))
        })());
    }
}

fn mult_ph(r: &mut Runner, pool: &[PoolEntry]) {
    for e in nonempty(pool) {
        let c = &e.complex;
        r.on("trace", e, (|| {
            let steps = multiplicative_ph_trace(c)?;
            let ok = steps
                .iter()
                .all(|s| s.ratio == s.factor && s.factor == s.simplex.omega());
            let last = steps.last().map_or(1, |s| s.determinant);
            Ok((
                ok && last == c.fermi_characteristic(),
                format!("{} steps, det L = {last}", steps.len()),
            ))
        })());
        r.on("bordered", e, (|| {
            let mut ok = true;
            for x in c.facets() {
                let p = extension_determinant_profile(c, &x)?;
                ok &= p.is_consistent() && p.boundary_euler == BigInt::from(1 - x.omega());
            }
            Ok((ok, "det K(t) = alpha - beta t^2 with beta / alpha = chi(boundary)".to_string()))
        })());
    }
}
