//! The strong ring of complexes: disjoint union as sum, Cartesian product as
//! product. Products are kept as cell sets whose connection graph is the
//! strong product of the factor connection graphs and whose connection
//! Laplacian is the tensor product of the factor Laplacians.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Label, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::incidence::connection_matrix;
use crate::linalg::{direct_sum, inverse_unimodular, numeric_spectrum, tensor_product, IntMatrix};

/// Strong product `g (x) h` on vertex pairs labelled `a*b`; pair `(i, k)`
/// gets index `i * h.n() + k`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let labels = (0..g.n() * m)
        .map(|p| Label::new(format!("{}*{}", g.label(p / m), h.label(p % m))))
        .collect();
    let mut out = Graph::with_labels(labels);
    let close = |gr: &Graph, a: usize, b: usize| a == b || gr.has_edge(a, b);
    for p in 0..g.n() * m {
        for q in p + 1..g.n() * m {
            if close(g, p / m, q / m) && close(h, p % m, q % m) {
                out.add_edge(p, q);
            }
        }
    }
    out
}

/// Cells of a Cartesian product: tuples of simplices, one from each factor,
/// ordered lexicographically by canonical factor indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCellSet {
    factors: Vec<SimplicialComplex>,
    cells: Vec<Vec<usize>>,
}

impl ProductCellSet {
    pub fn new(factors: Vec<SimplicialComplex>) -> Self {
        let mut cells: Vec<Vec<usize>> = vec![Vec::new()];
        for f in &factors {
            cells = cells
                .into_iter()
                .flat_map(|c| {
                    (0..f.len()).map(move |i| {
                        let mut next = c.clone();
                        next.push(i);
                        next
                    })
                })
                .collect();
        }
        ProductCellSet { factors, cells }
    }

    pub fn factors(&self) -> &[SimplicialComplex] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, i: usize) -> Vec<&Simplex> {
        self.cells[i].iter().zip(&self.factors).map(|(&k, f)| f.get(k)).collect()
    }

    /// `[1 2]*[2 3]` style label.
    pub fn cell_label(&self, i: usize) -> Label {
        let parts: Vec<String> = self.cell(i).iter().map(|s| s.as_label().to_string()).collect();
        Label::new(parts.join("*"))
    }

    pub fn dimension(&self, i: usize) -> usize {
        self.cell(i).iter().map(|s| s.dim()).sum()
    }

    pub fn omega(&self, i: usize) -> i64 {
        self.cell(i).iter().map(|s| s.omega()).product()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.len()).map(|i| self.omega(i)).sum()
    }

    fn cells_intersect(&self, i: usize, j: usize) -> bool {
        self.cell(i).iter().zip(self.cell(j)).all(|(x, y)| x.intersects(y))
    }

    /// Connection Laplacian built cell by cell: two cells meet when every
    /// coordinate pair meets.
    pub fn connection_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.len(), self.len(), |i, j| BigInt::from(self.cells_intersect(i, j) as i64))
    }

    pub fn connection_graph(&self) -> Graph {
        let mut g = Graph::with_labels((0..self.len()).map(|i| self.cell_label(i)).collect());
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.cells_intersect(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Cells of `a x b`.
pub fn product_cells(a: &SimplicialComplex, b: &SimplicialComplex) -> ProductCellSet {
    ProductCellSet::new(vec![a.clone(), b.clone()])
}

/// `L(a x b) = L(a) (x) L(b)`.
pub fn product_connection_laplacian(a: &SimplicialComplex, b: &SimplicialComplex) -> IntMatrix {
    tensor_product(&connection_matrix(a), &connection_matrix(b))
}

fn laplacian_of_product(factors: &[SimplicialComplex]) -> IntMatrix {
    factors
        .iter()
        .fold(IntMatrix::identity(1), |acc, f| tensor_product(&acc, &connection_matrix(f)))
}

/// An element of the strong ring: an integer combination of products of
/// complexes. Single-vertex factors are the unit and are dropped; an empty
/// factor makes the product vanish.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RingExpr {
    terms: BTreeMap<Vec<SimplicialComplex>, i64>,
}

impl RingExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(Vec::new(), c);
        e
    }

    pub fn complex(c: &SimplicialComplex) -> Self {
        let mut e = Self::zero();
        if c.is_empty() {
            return e;
        }
        let factors = if c.len() == 1 { Vec::new() } else { vec![c.clone()] };
        e.add_term(factors, 1);
        e
    }

    fn add_term(&mut self, mut factors: Vec<SimplicialComplex>, c: i64) {
        if c == 0 {
            return;
        }
        factors.sort();
        let entry = self.terms.entry(factors).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[SimplicialComplex], i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &RingExpr) -> RingExpr {
        let mut e = self.clone();
        for (f, c) in other.terms() {
            e.add_term(f.to_vec(), c);
        }
        e
    }

    pub fn scale(&self, k: i64) -> RingExpr {
        let mut e = Self::zero();
        for (f, c) in self.terms() {
            e.add_term(f.to_vec(), c * k);
        }
        e
    }

    pub fn neg(&self) -> RingExpr {
        self.scale(-1)
    }

    pub fn sub(&self, other: &RingExpr) -> RingExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingExpr) -> RingExpr {
        let mut e = Self::zero();
        for (f, c) in self.terms() {
            for (g, d) in other.terms() {
                e.add_term(f.iter().chain(g).cloned().collect(), c * d);
            }
        }
        e
    }
}

impl fmt::Display for RingExpr {
    /// Prints in the expression grammar, so the output parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (factors, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let parts: Vec<String> = factors.iter().map(gen_form).collect();
            match (c.abs(), parts.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => f.write_str(&parts.join(" * "))?,
                (a, false) => write!(f, "{a} * {}", parts.join(" * "))?,
            }
        }
        Ok(())
    }
}

fn gen_form(c: &SimplicialComplex) -> String {
    let facets: Vec<String> = c
        .facets()
        .iter()
        .map(|s| s.vertices().iter().map(Label::as_str).collect::<Vec<_>>().join(","))
        .collect();
    format!("gen({})", facets.join(" | "))
}

/// `E(e) = sum of c * prod chi(factor)`.
pub fn ring_energy(e: &RingExpr) -> BigInt {
    e.terms()
        .map(|(f, c)| {
            f.iter()
                .fold(BigInt::from(c), |acc, x| acc * x.euler_characteristic())
        })
        .sum()
}

/// `E(e)` computed by inverting the tensor Laplacian of every product and
/// summing its entries. Products with more than `max_cells` cells are
/// refused.
pub fn ring_energy_via_inverse(e: &RingExpr, max_cells: usize) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (factors, c) in e.terms() {
        let cells: usize = factors.iter().map(SimplicialComplex::len).product();
        if cells > max_cells {
            return Err(Error::TooLarge {
                what: "product cell count",
                dim: cells,
                max: max_cells,
            });
        }
        let g = inverse_unimodular(&laplacian_of_product(factors))?;
        total += g.sum_entries() * c;
    }
    Ok(total)
}

/// Largest deviations between the spectrum of a product or sum Laplacian
/// and the spectrum predicted from the factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumCheck {
    /// `sigma(L(a) (x) L(b))` against pairwise products.
    pub product_error: f64,
    /// `sigma(L(a) (+) L(b))` against the union of spectra.
    pub union_error: f64,
}

impl SpectrumCheck {
    pub fn within(&self, tol: f64) -> bool {
        self.product_error <= tol && self.union_error <= tol
    }
}

fn max_deviation(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn ring_spectrum_check(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SpectrumCheck> {
    let (la, lb) = (connection_matrix(a), connection_matrix(b));
    let (sa, sb) = (numeric_spectrum(&la)?, numeric_spectrum(&lb)?);
    let pairwise: Vec<f64> = sa.iter().flat_map(|x| sb.iter().map(move |y| x * y)).collect();
    let union: Vec<f64> = sa.iter().chain(&sb).copied().collect();
    Ok(SpectrumCheck {
        product_error: max_deviation(numeric_spectrum(&tensor_product(&la, &lb))?, pairwise),
        union_error: max_deviation(numeric_spectrum(&direct_sum(&la, &lb))?, union),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
}

fn tokenize(line: usize, text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() || ch == '.' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit() || **d == '.') {
                s.push(d);
                chars.next();
            }
            out.push(Tok::Num(s));
        } else if ch.is_alphanumeric() || ch == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            out.push(Tok::Ident(s));
        } else if "=*+-(),|".contains(ch) {
            out.push(Tok::Sym(ch));
            chars.next();
        } else {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected character {ch:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    line: usize,
    vars: &'a HashMap<String, RingExpr>,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn sum(&mut self) -> Result<RingExpr> {
        let mut e = self.product()?;
        loop {
            if self.eat('+') {
                e = e.add(&self.product()?);
            } else if self.eat('-') {
                e = e.sub(&self.product()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn product(&mut self) -> Result<RingExpr> {
        let mut e = self.factor()?;
        while self.eat('*') {
            e = e.mul(&self.factor()?);
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<RingExpr> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        if self.eat('(') {
            let e = self.sum()?;
            self.expect(')')?;
            return Ok(e);
        }
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                match s.parse::<i64>() {
                    Ok(c) => Ok(RingExpr::constant(c)),
                    Err(_) => self.err(format!("coefficient {s} is not an integer")),
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.eat('(') {
                    let c = if name == "gen" { self.gen_args()? } else { self.family_args(&name)? };
                    Ok(RingExpr::complex(&c))
                } else {
                    match self.vars.get(&name) {
                        Some(e) => Ok(e.clone()),
                        None => self.err(format!("undefined name {name}")),
                    }
                }
            }
            Some(t) => self.err(format!("unexpected {t:?}")),
            None => self.err("unexpected end of expression"),
        }
    }

    fn gen_args(&mut self) -> Result<SimplicialComplex> {
        let mut sets: Vec<Vec<String>> = vec![Vec::new()];
        loop {
            match self.peek().cloned() {
                Some(Tok::Sym(')')) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Sym('|')) => sets.push(Vec::new()),
                Some(Tok::Sym(',')) => {}
                Some(Tok::Ident(s)) | Some(Tok::Num(s)) => sets.last_mut().expect("nonempty").push(s),
                Some(t) => return self.err(format!("unexpected {t:?} in gen")),
                None => return self.err("unterminated gen("),
            }
            self.pos += 1;
        }
        if sets.iter().any(Vec::is_empty) {
            return self.err("gen: every set needs at least one vertex");
        }
        SimplicialComplex::generate(sets).or_else(|e| self.err(e.to_string()))
    }

    fn family_args(&mut self, name: &str) -> Result<SimplicialComplex> {
        let mut params = Vec::new();
        if !self.eat(')') {
            loop {
                match self.peek().cloned() {
                    Some(Tok::Num(s)) => match s.parse::<f64>() {
                        Ok(v) => params.push(v),
                        Err(_) => return self.err(format!("bad number {s}")),
                    },
                    _ => return self.err(format!("{name}: expected a number")),
                }
                self.pos += 1;
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        families::family(name, &params).or_else(|e| self.err(e.to_string()))
    }
}

/// Evaluates a program of `NAME = expr` statements separated by `;` or line
/// breaks. `*` is the Cartesian product, `+` the disjoint union, integers
/// are multiples of the unit. The value is that of the last statement.
pub fn parse_program(text: &str) -> Result<RingExpr> {
    let mut vars = HashMap::new();
    let mut last = None;
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = line.split('#').next().unwrap_or("");
        for stmt in line.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let toks = tokenize(line_no, stmt)?;
            let (target, start) = match (toks.first(), toks.get(1)) {
                (Some(Tok::Ident(name)), Some(Tok::Sym('='))) => (Some(name.clone()), 2),
                _ => (None, 0),
            };
            let mut p = Parser {
                toks,
                pos: start,
                line: line_no,
                vars: &vars,
            };
            let value = p.sum()?;
            if p.pos != p.toks.len() {
                return p.err(format!("trailing input after expression: {:?}", p.toks[p.pos]));
            }
            if let Some(name) = target {
                vars.insert(name, value.clone());
            }
            last = Some(value);
        }
    }
    last.ok_or(Error::Parse {
        line: 0,
        msg: "no statements".into(),
    })
}
