//! Acceptance run: seven criteria, one PASS/FAIL line each. Expected values
//! come either from the printed worked examples or from brute-force oracles
//! defined below, never from the library routine under test.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use connlap::complex::{disjoint_union, graphic_matroid, Simplex, SimplicialComplex};
use connlap::energy::{green_matrix, green_star_entry, super_trace_inverse, total_energy};
use connlap::graph::Graph;
use connlap::homotopy::{is_contractible, is_sphere, join_closure_check, MAX_VERTICES};
use connlap::incidence::{connection_graph, connection_matrix};
use connlap::linalg::{
    determinant, fredholm_path_oracle, inertia, inverse_unimodular, numeric_spectrum, permanent, tensor_product,
    IntMatrix,
};
use connlap::morse::{
    index_expectation, levitt_curvatures, multiplicative_ph_trace, parametrized_ph_check, ph_sum,
    EXHAUSTIVE_MAX_VERTICES,
};
use connlap::ring::{product_cells, product_connection_laplacian, ring_energy_via_inverse, RingExpr};
use connlap::verify::{build_pool, kite_graph, PoolEntry, PoolSpec};

const SEED: u64 = 7;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cx(sets: &[&[i32]]) -> SimplicialComplex {
    SimplicialComplex::generate(sets.iter().map(|s| s.to_vec())).unwrap()
}

fn pool() -> Vec<PoolEntry> {
    build_pool(&PoolSpec::Small, SEED).unwrap()
}

// ---- oracles ----

fn omega(x: &Simplex) -> i64 {
    if x.len() % 2 == 1 {
        1
    } else {
        -1
    }
}

fn chi_from_f(c: &SimplicialComplex) -> i64 {
    c.simplices().iter().map(omega).sum()
}

fn fermi(c: &SimplicialComplex) -> i64 {
    c.simplices().iter().map(omega).product()
}

/// Signed clique count `sum (-1)^(k-1)` over cliques of size `k >= 1`
/// inside `cand`.
fn clique_euler(adj: &[Vec<bool>], cand: &[usize]) -> i64 {
    fn rec(adj: &[Vec<bool>], cand: &[usize], size: usize) -> i64 {
        let mut s = 0;
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
            s += if size.is_multiple_of(2) { 1 } else { -1 } + rec(adj, &next, size + 1);
        }
        s
    }
    rec(adj, cand, 0)
}

/// Clique counts by size inside `cand`: index `k` holds cliques of `k + 1`
/// vertices.
fn clique_counts(adj: &[Vec<bool>], cand: &[usize]) -> Vec<u64> {
    fn rec(adj: &[Vec<bool>], cand: &[usize], size: usize, out: &mut Vec<u64>) {
        for (i, &v) in cand.iter().enumerate() {
            if out.len() <= size {
                out.push(0);
            }
            out[size] += 1;
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
            rec(adj, &next, size + 1, out);
        }
    }
    let mut out = Vec::new();
    rec(adj, cand, 0, &mut out);
    out
}

fn containment(c: &SimplicialComplex) -> Vec<Vec<bool>> {
    let s = c.simplices();
    s.iter()
        .map(|x| {
            s.iter()
                .map(|y| x != y && (x.is_subset_of(y) || y.is_subset_of(x)))
                .collect()
        })
        .collect()
}

fn graph_adj(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|a| (0..g.n()).map(|b| g.has_edge(a, b)).collect()).collect()
}

fn vertex_set(x: &Simplex) -> BTreeSet<String> {
    x.vertices().iter().map(|l| l.as_str().to_string()).collect()
}

fn matrix_from(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

fn check_inverse(l: &IntMatrix, g: &IntMatrix) -> Check {
    ensure(l.mul(g).unwrap() == IntMatrix::identity(l.rows()), || "L g != 1".into())
}

// ---- criteria ----

fn golden_examples() -> Check {
    let diamond = cx(&[&[1, 2, 3], &[2, 3, 4]]);
    let c3 = cx(&[&[1, 2], &[2, 3], &[3, 1]]);
    let k2 = cx(&[&[1, 2]]);
    let kite = graphic_matroid(&kite_graph());

    let check = |name: &str, c: &SimplicialComplex, f: &[u64], chi: i64, det: Option<i64>, energy: i64| -> Check {
        ensure(c.f_vector().0 == f, || format!("{name}: f-vector {:?}", c.f_vector().0))?;
        ensure(chi_from_f(c) == chi && c.euler_characteristic() == chi, || format!("{name}: chi"))?;
        let l = connection_matrix(c);
        if let Some(d) = det {
            let got = determinant(&l).map_err(|e| e.to_string())?;
            ensure(got == BigInt::from(d), || format!("{name}: det L = {got}"))?;
        }
        let g = green_matrix(c).map_err(|e| e.to_string())?;
        check_inverse(&l, g.matrix())?;
        ensure(g.total() == BigInt::from(energy), || format!("{name}: sum g = {}", g.total()))
    };
    check("diamond", &diamond, &[4, 5, 2], 1, Some(-1), 1)?;
    check("C3", &c3, &[3, 3], 0, Some(-1), 0)?;
    check("K2", &k2, &[2, 1], 1, None, 1)?;
    let i = inertia(&connection_matrix(&k2)).map_err(|e| e.to_string())?;
    ensure((i.positive, i.negative) == (2, 1), || format!("K2 inertia {i:?}"))?;
    check("kite matroid", &kite, &[5, 10, 8], 3, None, 3)?;
    ensure(green_matrix(&kite).unwrap().matrix().rows() == 23, || "kite inverse is not 23x23".into())?;

    // the printed C3 matrices, already in canonical order
    let l_c3 = matrix_from(&[
        &[1, 0, 0, 1, 1, 0],
        &[0, 1, 0, 1, 0, 1],
        &[0, 0, 1, 0, 1, 1],
        &[1, 1, 0, 1, 1, 1],
        &[1, 0, 1, 1, 1, 1],
        &[0, 1, 1, 1, 1, 1],
    ]);
    let g_c3 = matrix_from(&[
        &[-1, -1, -1, 1, 1, 0],
        &[-1, -1, -1, 1, 0, 1],
        &[-1, -1, -1, 0, 1, 1],
        &[1, 1, 0, -1, 0, 0],
        &[1, 0, 1, 0, -1, 0],
        &[0, 1, 1, 0, 0, -1],
    ]);
    ensure(connection_matrix(&c3) == l_c3, || "C3 L differs from the printed matrix".into())?;
    ensure(green_matrix(&c3).unwrap().matrix() == &g_c3, || "C3 g differs from the printed matrix".into())
}

fn theorem_fuzz(pool: &[PoolEntry]) -> Check {
    let random = pool.iter().filter(|e| e.name.starts_with("random")).count();
    ensure(random >= 50, || format!("only {random} random complexes"))?;
    ensure(
        pool.iter().all(|e| e.complex.vertices().len() <= 8),
        || "pool member with more than 8 vertices".into(),
    )?;
    for e in pool {
        let c = &e.complex;
        let ctx = |m: String| format!("{} {}: {m}", e.name, e.facet_list());
        let n = c.len();
        let s = c.simplices();
        let l = connection_matrix(c);
        let chi = chi_from_f(c);

        let det = determinant(&l).map_err(|e| ctx(e.to_string()))?;
        ensure(det == BigInt::from(fermi(c)), || ctx(format!("det L = {det}")))?;

        let g = green_matrix(c).map_err(|e| ctx(e.to_string()))?;
        let g = g.matrix();
        check_inverse(&l, g).map_err(ctx)?;
        ensure(g.sum_entries() == BigInt::from(chi), || ctx("energy".into()))?;

        let spec = numeric_spectrum(&l).map_err(|e| ctx(e.to_string()))?;
        let pos = spec.iter().filter(|&&x| x > 1e-6).count();
        let neg = spec.iter().filter(|&&x| x < -1e-6).count();
        let even = s.iter().filter(|x| omega(x) == 1).count();
        ensure(pos == even && neg == n - even, || ctx(format!("spectrum signs ({pos},{neg})")))?;
        let i = inertia(&l).map_err(|e| ctx(e.to_string()))?;
        ensure((i.positive, i.negative, i.zero) == (even, n - even, 0), || ctx(format!("inertia {i:?}")))?;

        let sets: Vec<BTreeSet<String>> = s.iter().map(vertex_set).collect();
        for a in 0..n {
            for b in 0..n {
                let u: BTreeSet<String> = sets[a].union(&sets[b]).cloned().collect();
                let star: i64 = (0..n).filter(|&z| u.is_subset(&sets[z])).map(|z| omega(&s[z])).sum();
                let want = omega(&s[a]) * omega(&s[b]) * star;
                ensure(*g.get(a, b) == BigInt::from(want), || ctx(format!("green star at {} {}", s[a], s[b])))?;
            }
        }
        if n <= 40 {
            for a in 0..n {
                let got = green_star_entry(c, &s[a], &s[(a * 7) % n]).unwrap();
                ensure(BigInt::from(got) == *g.get(a, (a * 7) % n), || ctx("green_star_entry".into()))?;
            }
        }

        let adj = containment(c);
        let mut sphere_sum = 0;
        let mut k = Vec::with_capacity(n);
        let mut upper = Vec::with_capacity(n);
        for a in 0..n {
            let sphere: Vec<usize> = (0..n).filter(|&b| adj[a][b]).collect();
            let chi_s = clique_euler(&adj, &sphere);
            ensure(*g.get(a, a) == BigInt::from(1 - chi_s), || ctx(format!("diagonal at {}", s[a])))?;
            sphere_sum += omega(&s[a]) * chi_s;
            let up: Vec<usize> = (0..n).filter(|&b| adj[a][b] && s[a].is_subset_of(&s[b])).collect();
            let chi_up = clique_euler(&adj, &up);
            upper.push(chi_up);
            k.push(BigInt::from(1 - chi_up));
        }
        ensure(sphere_sum == 0, || ctx(format!("sum omega chi(S) = {sphere_sum}")))?;
        ensure(l.mul_vec(&k).unwrap().iter().all(BigInt::is_one), || ctx("L k != 1".into()))?;
        for a in 0..n {
            let ball: Vec<usize> = (0..n).filter(|&b| s[a].intersects(&s[b])).collect();
            let d = ball.len() as i64 - 1;
            let sum: i64 = ball.iter().map(|&b| upper[b]).sum();
            ensure(d == sum, || ctx(format!("unit ball at {}: d = {d}, sum = {sum}", s[a])))?;
        }
        let st = super_trace_inverse(c).map_err(|e| ctx(e.to_string()))?;
        let st_oracle: BigInt = (0..n).map(|a| g.get(a, a) * omega(&s[a])).sum();
        ensure(st == BigInt::from(chi) && st_oracle == st, || ctx(format!("str = {st}")))?;
    }
    Ok(())
}

fn random_injective(n: usize, rng: &mut ChaCha8Rng) -> Vec<Rational64> {
    let mut v: Vec<i64> = (0..n as i64).collect();
    v.shuffle(rng);
    v.into_iter().map(Rational64::from_integer).collect()
}

fn levitt_oracle(g: &Graph, v: usize) -> BigRational {
    let adj = graph_adj(g);
    let nb: Vec<usize> = (0..g.n()).filter(|&w| adj[v][w]).collect();
    let counts = clique_counts(&adj, &nb);
    let mut k = BigRational::one();
    for (i, &c) in counts.iter().enumerate() {
        let term = BigRational::new(BigInt::from(c), BigInt::from(i as i64 + 2));
        if i % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

fn morse_suite(pool: &[PoolEntry]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for e in pool {
        let ctx = |m: String| format!("{} {}: {m}", e.name, e.facet_list());
        let g = e.graph();
        let adj = graph_adj(&g);
        let all: Vec<usize> = (0..g.n()).collect();
        let chi = clique_euler(&adj, &all);
        ensure(chi == chi_from_f(&e.complex), || ctx("graph chi".into()))?;
        for _ in 0..20 {
            let f = random_injective(g.n(), &mut rng);
            let oracle: i64 = (0..g.n())
                .map(|v| {
                    let below: Vec<usize> = (0..g.n()).filter(|&w| adj[v][w] && f[w] < f[v]).collect();
                    1 - clique_euler(&adj, &below)
                })
                .sum();
            let got = ph_sum(&g, &f).map_err(|e| ctx(e.to_string()))?;
            ensure(got == chi && oracle == chi, || ctx(format!("index sum {got}, oracle {oracle}")))?;
            ensure(parametrized_ph_check(&g, &f).unwrap(), || ctx("f-function identity".into()))?;
        }
        let lev = levitt_curvatures(&g);
        let oracle: Vec<BigRational> = (0..g.n()).map(|v| levitt_oracle(&g, v)).collect();
        ensure(lev.values() == oracle.as_slice(), || ctx("Levitt curvature".into()))?;
        let total: BigRational = oracle.iter().sum();
        ensure(total == BigRational::from_integer(chi.into()), || ctx(format!("sum K = {total}")))?;
        if g.n() <= EXHAUSTIVE_MAX_VERTICES {
            let ex = index_expectation(&g, 0, SEED).map_err(|e| ctx(e.to_string()))?;
            ensure(ex.values() == oracle.as_slice(), || ctx("index expectation".into()))?;
        }
        let c = &e.complex;
        let steps = multiplicative_ph_trace(c).map_err(|e| ctx(e.to_string()))?;
        ensure(steps.len() == c.len(), || ctx("trace length".into()))?;
        let mut prev = BigInt::one();
        for (k, st) in steps.iter().enumerate() {
            ensure(st.ratio == omega(&st.simplex) && st.factor == omega(&st.simplex), || {
                ctx(format!("trace factor at {}", st.simplex))
            })?;
            if c.len() <= 64 {
                let d = determinant(&connection_matrix(&c.prefix(k + 1))).unwrap();
                ensure(d == &prev * omega(&st.simplex), || ctx(format!("det ratio at {}", st.simplex)))?;
                prev = d;
            }
        }
    }
    Ok(())
}

/// Reference 15x15 product Laplacians, written in the listed orders
/// `G = (1,2),(1),(2)` and `H = (1,2),(2,3),(1),(2),(3)`.
const PRINTED_G_TIMES_H: [&str; 15] = [
    "1 1 1 1 0 1 1 1 1 0 1 1 1 1 0",
    "1 1 0 1 1 1 1 0 1 1 1 1 0 1 1",
    "1 0 1 0 0 1 0 1 0 0 1 0 1 0 0",
    "1 1 0 1 0 1 1 0 1 0 1 1 0 1 0",
    "0 1 0 0 1 0 1 0 0 1 0 1 0 0 1",
    "1 1 1 1 0 1 1 1 1 0 0 0 0 0 0",
    "1 1 0 1 1 1 1 0 1 1 0 0 0 0 0",
    "1 0 1 0 0 1 0 1 0 0 0 0 0 0 0",
    "1 1 0 1 0 1 1 0 1 0 0 0 0 0 0",
    "0 1 0 0 1 0 1 0 0 1 0 0 0 0 0",
    "1 1 1 1 0 0 0 0 0 0 1 1 1 1 0",
    "1 1 0 1 1 0 0 0 0 0 1 1 0 1 1",
    "1 0 1 0 0 0 0 0 0 0 1 0 1 0 0",
    "1 1 0 1 0 0 0 0 0 0 1 1 0 1 0",
    "0 1 0 0 1 0 0 0 0 0 0 1 0 0 1",
];

const PRINTED_H_TIMES_G: [&str; 15] = [
    "1 1 1 1 1 1 1 1 1 1 1 1 0 0 0",
    "1 1 0 1 1 0 1 1 0 1 1 0 0 0 0",
    "1 0 1 1 0 1 1 0 1 1 0 1 0 0 0",
    "1 1 1 1 1 1 0 0 0 1 1 1 1 1 1",
    "1 1 0 1 1 0 0 0 0 1 1 0 1 1 0",
    "1 0 1 1 0 1 0 0 0 1 0 1 1 0 1",
    "1 1 1 0 0 0 1 1 1 0 0 0 0 0 0",
    "1 1 0 0 0 0 1 1 0 0 0 0 0 0 0",
    "1 0 1 0 0 0 1 0 1 0 0 0 0 0 0",
    "1 1 1 1 1 1 0 0 0 1 1 1 0 0 0",
    "1 1 0 1 1 0 0 0 0 1 1 0 0 0 0",
    "1 0 1 1 0 1 0 0 0 1 0 1 0 0 0",
    "0 0 0 1 1 1 0 0 0 0 0 0 1 1 1",
    "0 0 0 1 1 0 0 0 0 0 0 0 1 1 0",
    "0 0 0 1 0 1 0 0 0 0 0 0 1 0 1",
];

fn parse_printed(rows: &[&str]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| r.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect()
}

/// Compares a printed product matrix in listed order with the computed
/// one in canonical order.
fn compare_printed(
    printed: &[Vec<i64>],
    a: &SimplicialComplex,
    a_listed: &[&[i32]],
    b: &SimplicialComplex,
    b_listed: &[&[i32]],
) -> Check {
    let m = product_connection_laplacian(a, b);
    let idx = |c: &SimplicialComplex, v: &[i32]| c.index_of(&Simplex::new(v.iter().copied()).unwrap()).unwrap();
    let perm: Vec<usize> = a_listed
        .iter()
        .flat_map(|x| b_listed.iter().map(move |y| idx(a, x) * b.len() + idx(b, y)))
        .collect();
    for p in 0..perm.len() {
        for q in 0..perm.len() {
            ensure(*m.get(perm[p], perm[q]) == BigInt::from(printed[p][q]), || {
                format!("product entry ({p},{q}) differs from the printed matrix")
            })?;
        }
    }
    Ok(())
}

fn spectral_examples(pool: &[PoolEntry]) -> Check {
    let k2 = cx(&[&[1, 2]]);
    let path = cx(&[&[1, 2], &[2, 3]]);
    let r2 = 2f64.sqrt();
    let want = [1.0 - r2, 1.0, 1.0 + r2];
    let got = numeric_spectrum(&connection_matrix(&k2)).map_err(|e| e.to_string())?;
    ensure(
        got.len() == 3 && got.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-9),
        || format!("K2 spectrum {got:?}"),
    )?;
    let r13 = 13f64.sqrt();
    let r5 = 5f64.sqrt();
    let mut want_h = vec![(3.0 - r13) / 2.0, (1.0 - r5) / 2.0, 1.0, (1.0 + r5) / 2.0, (3.0 + r13) / 2.0];
    want_h.sort_by(f64::total_cmp);
    let got_h = numeric_spectrum(&connection_matrix(&path)).map_err(|e| e.to_string())?;
    ensure(
        got_h.iter().zip(&want_h).all(|(a, b)| (a - b).abs() < 1e-9),
        || format!("path spectrum {got_h:?}"),
    )?;

    let g_listed: &[&[i32]] = &[&[1, 2], &[1], &[2]];
    let h_listed: &[&[i32]] = &[&[1, 2], &[2, 3], &[1], &[2], &[3]];
    compare_printed(&parse_printed(&PRINTED_G_TIMES_H), &k2, g_listed, &path, h_listed)?;
    compare_printed(&parse_printed(&PRINTED_H_TIMES_G), &path, h_listed, &k2, g_listed)?;

    let members: Vec<&PoolEntry> = pool.iter().filter(|e| e.complex.len() <= 12).take(10).collect();
    for (i, a) in members.iter().enumerate() {
        for b in members.iter().skip(i) {
            let la = connection_matrix(&a.complex);
            let lb = connection_matrix(&b.complex);
            let sa = numeric_spectrum(&la).unwrap();
            let sb = numeric_spectrum(&lb).unwrap();
            let mut products: Vec<f64> = sa.iter().flat_map(|x| sb.iter().map(move |y| x * y)).collect();
            products.sort_by(f64::total_cmp);
            let st = numeric_spectrum(&tensor_product(&la, &lb)).unwrap();
            let err = st.iter().zip(&products).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            ensure(err < 1e-6, || format!("{} x {}: spectrum error {err:e}", a.name, b.name))?;
        }
    }
    Ok(())
}

fn ring_homomorphism(pool: &[PoolEntry]) -> Check {
    let members: Vec<&PoolEntry> = pool.iter().filter(|e| e.complex.len() <= 12).collect();
    let mut pairs = 0;
    for (i, a) in members.iter().enumerate() {
        for b in members.iter().skip(i).take(3) {
            let (ca, cb) = (&a.complex, &b.complex);
            let ctx = |m: String| format!("{} x {}: {m}", a.name, b.name);
            let lt = tensor_product(&connection_matrix(ca), &connection_matrix(cb));
            let gt = inverse_unimodular(&lt).map_err(|e| ctx(e.to_string()))?;
            check_inverse(&lt, &gt).map_err(ctx)?;
            let (xa, xb) = (chi_from_f(ca), chi_from_f(cb));
            ensure(gt.sum_entries() == BigInt::from(xa * xb), || ctx(format!("E = {}", gt.sum_entries())))?;
            let expr = RingExpr::complex(ca).mul(&RingExpr::complex(cb));
            ensure(
                ring_energy_via_inverse(&expr, usize::MAX).unwrap() == BigInt::from(xa * xb),
                || ctx("ring energy via inverse".into()),
            )?;
            let u = total_energy(&disjoint_union(ca, cb)).map_err(|e| ctx(e.to_string()))?;
            ensure(u == BigInt::from(xa + xb), || ctx(format!("E(sum) = {u}")))?;

            let (ga, gb) = (connection_graph(ca), connection_graph(cb));
            let cells = product_cells(ca, cb);
            let pg = cells.connection_graph();
            ensure(pg.n() == ga.n() * gb.n(), || ctx("cell count".into()))?;
            for p in 0..pg.n() {
                let (i1, k1) = (p / gb.n(), p % gb.n());
                let want_label = format!("{}*{}", ga.label(i1), gb.label(k1));
                ensure(pg.label(p).as_str() == want_label, || ctx(format!("label {}", pg.label(p))))?;
                for q in 0..pg.n() {
                    let (i2, k2) = (q / gb.n(), q % gb.n());
                    let close_a = i1 == i2 || ga.has_edge(i1, i2);
                    let close_b = k1 == k2 || gb.has_edge(k1, k2);
                    let want = p != q && close_a && close_b;
                    ensure(pg.has_edge(p, q) == want, || ctx(format!("strong product edge {p}-{q}")))?;
                }
            }
            pairs += 1;
        }
    }
    ensure(pairs >= 20, || format!("only {pairs} pairs"))
}

fn brute_permanent(m: &[Vec<i64>]) -> i64 {
    fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i64 {
        if row == m.len() {
            return 1;
        }
        let mut s = 0;
        for c in 0..m.len() {
            if !used[c] && m[row][c] != 0 {
                used[c] = true;
                s += m[row][c] * rec(m, row + 1, used);
                used[c] = false;
            }
        }
        s
    }
    rec(m, 0, &mut vec![false; m.len()])
}

fn paths_and_permanents(pool: &[PoolEntry]) -> Check {
    let with_one = [1, 2, 6, 24, 120, 720];
    let bare = [0, 1, 2, 9, 44, 265];
    for n in 1..=6 {
        let a: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i != j) as i64).collect()).collect();
        let j: Vec<Vec<i64>> = vec![vec![1; n]; n];
        let ma = IntMatrix::from_rows(&a);
        let mj = IntMatrix::from_rows(&j);
        let pa = permanent(&ma).unwrap();
        let pj = permanent(&mj).unwrap();
        ensure(pj == BigInt::from(with_one[n - 1]) && brute_permanent(&j) == with_one[n - 1], || {
            format!("per(1+A(K{n})) = {pj}")
        })?;
        ensure(pa == BigInt::from(bare[n - 1]) && brute_permanent(&a) == bare[n - 1], || {
            format!("per(A(K{n})) = {pa}")
        })?;
    }
    let mut checked = 0;
    for e in pool.iter().filter(|e| e.complex.len() <= 9) {
        let l = connection_matrix(&e.complex);
        let n = l.rows();
        let a = IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::zero() } else { l.get(i, j).clone() });
        let fred = fredholm_path_oracle(&a).map_err(|err| err.to_string())?;
        let det = determinant(&l).unwrap();
        ensure(fred == det && det == BigInt::from(fermi(&e.complex)), || {
            format!("{}: paths give {fred}, det(1+A) = {det}", e.name)
        })?;
        checked += 1;
    }
    ensure(checked > 0, || "no connection graph with at most 9 simplices".into())
}

fn homotopy_suite(pool: &[PoolEntry]) -> Check {
    let empty = is_sphere(&Graph::edgeless(0)).map_err(|e| e.to_string())?;
    ensure(empty.sphere_dimension == Some(-1), || format!("empty: {empty:?}"))?;
    let mut g = Graph::edgeless(2);
    for n in 1..=3 {
        let v = is_sphere(&g).map_err(|e| e.to_string())?;
        ensure(v.sphere_dimension == Some(n - 1) && v.replay(&g).unwrap(), || format!("{n} P2: {v:?}"))?;
        g = g.join(&Graph::edgeless(2));
    }
    let oct = whitney_graph(&pool.iter().find(|e| e.name == "octahedron").unwrap().complex);
    let v = is_sphere(&oct).map_err(|e| e.to_string())?;
    ensure(v.sphere_dimension == Some(2), || format!("octahedron: {v:?}"))?;
    ensure(clique_euler(&graph_adj(&oct), &(0..oct.n()).collect::<Vec<_>>()) == 2, || "octahedron chi".into())?;

    let mut certified = vec![("P2".to_string(), Graph::edgeless(2))];
    let mut contractible = 0;
    for e in pool {
        let g = e.graph();
        if g.n() > MAX_VERTICES {
            continue;
        }
        let v = is_contractible(&g).map_err(|err| err.to_string())?;
        let chi = clique_euler(&graph_adj(&g), &(0..g.n()).collect::<Vec<_>>());
        if v.contractible {
            contractible += 1;
            ensure(chi == 1, || format!("{} contractible with chi = {chi}", e.name))?;
        }
        if (v.contractible || v.is_sphere()) && g.n() <= 6 && certified.len() < 10 {
            certified.push((e.name.clone(), g));
        }
    }
    ensure(contractible > 0, || "no contractible pool member".into())?;
    let rep = join_closure_check(&certified).map_err(|e| e.to_string())?;
    ensure(!rep.checked.is_empty(), || "no join was checked".into())?;
    let bad = rep.violations().next().map(|c| format!("join {} + {}: expected {}", c.left, c.right, c.expected));
    bad.map_or(Ok(()), Err)
}

fn whitney_graph(c: &SimplicialComplex) -> Graph {
    connlap::verify::one_skeleton(c)
}

fn main() -> ExitCode {
    let pool = pool();
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Check + '_>)> = vec![
        ("1 golden examples", Duration::from_secs(1), Box::new(golden_examples)),
        ("2 theorem fuzz", Duration::from_secs(60), Box::new(|| theorem_fuzz(&pool))),
        ("3 morse suite", Duration::from_secs(120), Box::new(|| morse_suite(&pool))),
        ("4 spectral examples", Duration::MAX, Box::new(|| spectral_examples(&pool))),
        ("5 ring homomorphism", Duration::MAX, Box::new(|| ring_homomorphism(&pool))),
        ("6 paths and permanents", Duration::MAX, Box::new(|| paths_and_permanents(&pool))),
        ("7 homotopy suite", Duration::MAX, Box::new(|| homotopy_suite(&pool))),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let verdict = match (&result, took <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL over time limit of {limit:?}"),
            (Err(e), _) => format!("FAIL {e}"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {name}: {verdict} ({:.2}s)", took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
