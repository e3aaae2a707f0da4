//! Hierarchy and closure properties of the Lorentzian decision: accepted
//! polynomials are pointwise log concave on the positive orthant, the class
//! is closed under partial derivatives, cubic Hessians decompose as
//! Σ x_i·∇²∂_i f, and for multiaffine inputs the pointwise and complete
//! notions agree on a grid.

mod common;

use common::{
    qpoly, random_homogeneous, random_nonneg_linear_product, random_positive_point,
    random_positive_rational, rng,
};
use lorentzian::lorentzian::{
    is_lorentzian, log_concave_at, quadratic_is_log_concave, FailureKind,
};
use lorentzian::{inertia, rat, Monomial, Polynomial, QPoly, Rational, SymMatrix};
use num_traits::Zero;
use rand::Rng;

fn elementary_symmetric(n: usize, d: usize) -> QPoly {
    let mut p = QPoly::zero(n);
    let mut subset: Vec<u32> = Vec::new();
    fn rec(p: &mut QPoly, n: usize, d: usize, start: u32, subset: &mut Vec<u32>) {
        if subset.len() == d {
            p.add_term(
                Monomial::new(subset.iter().map(|&v| (v, 1))),
                Rational::from_integer(1.into()),
            );
            return;
        }
        for v in start..n as u32 {
            subset.push(v);
            rec(p, n, d, v + 1, subset);
            subset.pop();
        }
    }
    rec(&mut p, n, d, 0, &mut subset);
    p
}

/// A corpus of polynomials the test expects to be accepted.
fn accepted_corpus(seed: u64) -> Vec<QPoly> {
    let mut rng = rng(seed);
    let mut corpus = Vec::new();
    for n in 1..=5 {
        for d in 1..=n {
            corpus.push(elementary_symmetric(n, d));
        }
    }
    for _ in 0..12 {
        let n = rng.gen_range(2..=4);
        let k = rng.gen_range(2..=4);
        corpus.push(random_nonneg_linear_product(&mut rng, n, k));
    }
    corpus
}

#[test]
fn elementary_symmetric_polynomials_accepted() {
    for n in 1..=5 {
        for d in 1..=n {
            let e = elementary_symmetric(n, d);
            assert!(
                is_lorentzian(&e).is_lorentzian,
                "e_{d} on {n} variables must be accepted"
            );
        }
    }
}

#[test]
fn hierarchy_accepted_implies_pointwise_log_concave() {
    let mut rng = rng(0xAC5);
    for f in accepted_corpus(0xAC0) {
        assert!(is_lorentzian(&f).is_lorentzian, "corpus member rejected");
        if f.degree().is_none_or(|d| d < 2) || f.num_vars() < 2 {
            continue;
        }
        for _ in 0..50 {
            let w = random_positive_point(&mut rng, f.num_vars(), 6, 4);
            assert!(
                log_concave_at(&f, &w).unwrap(),
                "accepted polynomial fails pointwise at {w:?}: {f}"
            );
        }
    }
}

#[test]
fn derivative_closure() {
    for f in accepted_corpus(0xAC1) {
        for i in 0..f.num_vars() as u32 {
            let d = f.partial(i).unwrap();
            if d.is_zero() {
                continue;
            }
            assert!(
                is_lorentzian(&d).is_lorentzian,
                "derivative ∂_{i} of accepted polynomial rejected: {f}"
            );
        }
    }
}

#[test]
fn cubic_hessian_decomposition() {
    let mut rng = rng(0xAC2);
    for _ in 0..20 {
        let n = rng.gen_range(2..=4);
        let nonneg = rng.gen_bool(0.5);
        let f = random_homogeneous(&mut rng, n, 3, 6, nonneg);
        let x = random_positive_point(&mut rng, n, 6, 3);
        // M_i = constant Hessian of ∂_i f
        let ms: Vec<SymMatrix<Rational>> = (0..n as u32)
            .map(|i| f.partial(i).unwrap().quadratic_hessian().unwrap())
            .collect();
        let mut sum = SymMatrix::zero(n);
        for (i, m) in ms.iter().enumerate() {
            sum = sum.add(&m.scale(&x[i]));
        }
        assert_eq!(f.hessian_at(&x).unwrap(), sum, "decomposition fails for {f}");
    }
}

#[test]
fn multiaffine_agreement_on_grid() {
    let mut rng = rng(0xAC3);
    let grid_vals = [rat(1, 2), rat(1, 1), rat(2, 1)];
    let mut seen_accept = 0;
    let mut seen_reject = 0;
    for _ in 0..60 {
        let n = rng.gen_range(2..=4usize);
        let d = rng.gen_range(2..=3.min(n as u32));
        // random multiaffine homogeneous with nonnegative coefficients
        let mut f = QPoly::zero(n);
        for _ in 0..rng.gen_range(2..=5) {
            let mut vars: Vec<u32> = (0..n as u32).collect();
            for i in (1..vars.len()).rev() {
                let j = rng.gen_range(0..=i);
                vars.swap(i, j);
            }
            vars.truncate(d as usize);
            f.add_term(
                Monomial::new(vars.into_iter().map(|v| (v, 1))),
                rat(rng.gen_range(1..=4), rng.gen_range(1..=2)),
            );
        }
        if f.is_zero() || f.degree() != Some(d) || !f.is_homogeneous() {
            continue;
        }
        assert!(f.is_multiaffine());
        let verdict = is_lorentzian(&f);
        // dense grid of the positive orthant
        let mut points = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &points {
                for v in &grid_vals {
                    let mut q: Vec<Rational> = p.clone();
                    q.push(v.clone());
                    next.push(q);
                }
            }
            points = next;
        }
        if verdict.is_lorentzian {
            seen_accept += 1;
            for w in &points {
                assert!(
                    log_concave_at(&f, w).unwrap(),
                    "accepted multiaffine fails at {w:?}: {f}"
                );
            }
        } else if let Some(w) = &verdict.failure_witness {
            if let FailureKind::BadInertia { .. } = w.kind {
                seen_reject += 1;
                if w.alpha.degree() == 0 {
                    // quadratic-level failure of f itself: some grid point
                    // must fail pointwise log-concavity
                    assert!(
                        points.iter().any(|p| !log_concave_at(&f, p).unwrap()),
                        "rejected multiaffine passes everywhere: {f}"
                    );
                } else {
                    // a derivative condition failed
                    let d = f.differentiate(&w.alpha).unwrap();
                    assert!(!quadratic_is_log_concave(&d).unwrap());
                }
            }
        }
    }
    assert!(seen_accept >= 3, "corpus too skewed: {seen_accept} accepts");
    assert!(seen_reject >= 3, "corpus too skewed: {seen_reject} rejects");
}

#[test]
fn witness_alpha_is_graded_lex_least() {
    // both x1² + x2² + x3x4-style splits: the degree-0 witness must come
    // before any level-1 witness
    let f = qpoly(
        4,
        &[
            (&[(0, 1), (1, 1)], (1, 1)),
            (&[(2, 1), (3, 1)], (1, 1)),
        ],
    );
    let w = is_lorentzian(&f).failure_witness.unwrap();
    assert_eq!(w.alpha, Monomial::one());

    // failure only visible at level 1: x1²x2 + x2²x3-ish shapes
    let g = qpoly(3, &[(&[(0, 2), (1, 1)], (1, 1)), (&[(1, 2), (2, 1)], (1, 1))]);
    let v = is_lorentzian(&g);
    if let Some(w) = &v.failure_witness {
        assert!(w.alpha.degree() >= 1, "level-0 support of {g} is connected");
    }
}

#[test]
fn bad_inertia_witness_carries_counts() {
    let f = qpoly(2, &[(&[(0, 2)], (1, 1)), (&[(1, 2)], (1, 1))]);
    match is_lorentzian(&f).failure_witness.unwrap().kind {
        FailureKind::BadInertia { inertia: ine } => {
            assert_eq!((ine.n_pos, ine.n_zero, ine.n_neg), (2, 0, 0));
        }
        other => panic!("expected bad-inertia, got {other:?}"),
    }
    // and the raw Hessian agrees
    let h = f.quadratic_hessian().unwrap();
    assert_eq!(inertia(&h).n_pos, 2);
}

#[test]
fn accepted_cubics_equal_products_route() {
    // (x+y)(y+z)(x+z) is a product of nonneg linear forms, hence accepted,
    // and stays accepted after small nonneg perturbations that keep the
    // Lorentzian structure of all quadratic derivatives
    let p = Polynomial::linear_form(&[rat(1, 1), rat(1, 1), rat(0, 1)]);
    let q = Polynomial::linear_form(&[rat(0, 1), rat(1, 1), rat(1, 1)]);
    let r = Polynomial::linear_form(&[rat(1, 1), rat(0, 1), rat(1, 1)]);
    let f = &(&p * &q) * &r;
    assert!(is_lorentzian(&f).is_lorentzian);
}

/// Sampled oracle for the *definition* of complete log-concavity: apply a
/// random nonnegative direction matrix V (as a sequence of directional
/// derivatives), then check nonnegativity and the one-positive-eigenvalue
/// condition at random positive points.
fn clc_violation_found(
    f: &QPoly,
    rng: &mut rand_chacha::ChaCha8Rng,
    combos: usize,
) -> Option<String> {
    let n = f.num_vars();
    let d = f.degree().unwrap_or(0);
    for _ in 0..combos {
        let k = rng.gen_range(0..=d.saturating_sub(2)) as usize;
        let dirs: Vec<Vec<Rational>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            Rational::zero()
                        } else {
                            random_positive_rational(rng, 4, 2)
                        }
                    })
                    .collect()
            })
            .collect();
        let g = f.dv_derivative(&dirs).unwrap();
        if g.is_zero() {
            continue;
        }
        if !g.has_nonneg_coeffs() {
            // nonneg coefficients certify nonnegativity on the orthant; a
            // negative coefficient in a derivative of a nonneg-coeff f is
            // impossible, so this would be an arithmetic bug
            return Some(format!("negative coefficient in D_V f for V = {dirs:?}"));
        }
        if g.degree().is_some_and(|dd| dd >= 2) {
            let w = random_positive_point(rng, n, 5, 3);
            let h = g.hessian_at(&w).unwrap();
            let ine = inertia(&h);
            if ine.n_pos != 1 {
                return Some(format!(
                    "D_V f has inertia {ine} at {w:?} for V = {dirs:?}"
                ));
            }
        }
    }
    None
}

#[test]
fn decision_matches_the_definition_oracle() {
    let mut rng = rng(0xDEF1);
    // accepted polynomials: no violation over 100 sampled (V, w) combos
    for f in accepted_corpus(0xDEF0) {
        if f.degree().is_none_or(|d| d < 2) {
            continue;
        }
        if let Some(msg) = clc_violation_found(&f, &mut rng, 100) {
            panic!("accepted polynomial violates the definition: {msg}\nf = {f}");
        }
    }
    // rejected with a bad-inertia witness: the witness derivative is itself
    // a D_V f image (unit-vector directions) violating log-concavity at any
    // positive point, certifying the rejection against the definition
    let mut certified = 0;
    for _ in 0..40 {
        let n = rng.gen_range(2..=4usize);
        let d = rng.gen_range(2..=4u32);
        let terms = rng.gen_range(2..=6);
        let f = random_homogeneous(&mut rng, n, d, terms, true);
        if f.degree() != Some(d) {
            continue;
        }
        let v = is_lorentzian(&f);
        if v.is_lorentzian {
            continue;
        }
        let w = v.failure_witness.unwrap();
        if let FailureKind::BadInertia { inertia: ine } = w.kind {
            let dirs: Vec<Vec<Rational>> = w
                .alpha
                .iter()
                .flat_map(|(var, e)| {
                    std::iter::repeat_with(move || {
                        let mut unit = vec![Rational::zero(); n];
                        unit[var as usize] = Rational::from_integer(1.into());
                        unit
                    })
                    .take(e as usize)
                })
                .collect();
            let g = f.dv_derivative(&dirs).unwrap();
            assert_eq!(g, f.differentiate(&w.alpha).unwrap());
            assert_eq!(inertia(&g.quadratic_hessian().unwrap()), ine);
            assert!(ine.n_pos >= 2);
            certified += 1;
        }
    }
    assert!(certified >= 5, "only {certified} rejections certified");
}

/// Brute-force decomposability: try every 2-partition of the active
/// variables and look for one with no straddling monomial.
fn decomposable_by_partition(f: &QPoly) -> bool {
    let vars: Vec<u32> = f.support_vars().into_iter().collect();
    if vars.len() <= 1 {
        return false;
    }
    for mask in 1u64..(1u64 << (vars.len() - 1)) {
        let left: Vec<u32> = vars
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let straddles = f.terms().any(|(m, _)| {
            let mut in_left = false;
            let mut in_right = false;
            for (v, _) in m.iter() {
                if left.contains(&v) {
                    in_left = true;
                } else {
                    in_right = true;
                }
            }
            in_left && in_right
        });
        if !straddles {
            return true;
        }
    }
    false
}

#[test]
fn indecomposability_matches_partition_brute_force() {
    let mut rng = rng(0xDEF2);
    let mut split = 0;
    for _ in 0..120 {
        let n = rng.gen_range(2..=6usize);
        let d = rng.gen_range(1..=4u32);
        let terms = rng.gen_range(1..=5);
        let f = random_homogeneous(&mut rng, n, d, terms, false);
        let connected = lorentzian::lorentzian::is_indecomposable(&f).unwrap();
        let brute = !decomposable_by_partition(&f);
        assert_eq!(connected, brute, "disagreement on {f}");
        if !connected {
            split += 1;
        }
    }
    assert!(split >= 10, "corpus never decomposed ({split})");
}

#[test]
fn quadratic_test_equals_pointwise_test() {
    let mut rng = rng(0xDEF3);
    for _ in 0..40 {
        let n = rng.gen_range(2..=5usize);
        let terms = rng.gen_range(1..=6);
        let f = random_homogeneous(&mut rng, n, 2, terms, true);
        if f.degree() != Some(2) {
            continue;
        }
        let by_matrix = quadratic_is_log_concave(&f).unwrap();
        let w = random_positive_point(&mut rng, n, 5, 3);
        let by_point = log_concave_at(&f, &w).unwrap();
        assert_eq!(by_matrix, by_point, "constant-Hessian quadratic: {f}");
    }
}
