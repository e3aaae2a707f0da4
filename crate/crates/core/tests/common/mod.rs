//! Shared generators for the integration suites: seeded random rationals,
//! polynomials, matrices and congruences. Everything is deterministic per
//! seed.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use lorentzian::{rat, Monomial, Polynomial, QPoly, Rational, SymMatrix};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in [-bound, bound] and denominator in [1, dens].
pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64, dens: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=dens))
}

pub fn random_positive_rational(rng: &mut ChaCha8Rng, bound: i64, dens: i64) -> Rational {
    rat(rng.gen_range(1..=bound), rng.gen_range(1..=dens))
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize, bound: i64, dens: i64) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng, bound, dens)).collect()
}

pub fn random_positive_point(
    rng: &mut ChaCha8Rng,
    n: usize,
    bound: i64,
    dens: i64,
) -> Vec<Rational> {
    (0..n)
        .map(|_| random_positive_rational(rng, bound, dens))
        .collect()
}

/// Random monomial of total degree d over n variables.
pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&exps)
}

/// Random nonzero homogeneous polynomial of degree d with about `terms`
/// terms; coefficients positive when `nonneg`.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    n: usize,
    d: u32,
    terms: usize,
    nonneg: bool,
) -> QPoly {
    loop {
        let mut p = QPoly::zero(n);
        for _ in 0..terms {
            let c = if nonneg {
                random_positive_rational(rng, 6, 3)
            } else {
                random_rational(rng, 6, 3)
            };
            p.add_term(random_monomial(rng, n, d), c);
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Product of `k` random nonzero linear forms with nonnegative coefficients.
pub fn random_nonneg_linear_product(rng: &mut ChaCha8Rng, n: usize, k: usize) -> QPoly {
    let mut out = QPoly::constant(n, rat(1, 1));
    for _ in 0..k {
        let form = loop {
            let coeffs: Vec<Rational> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        rat(0, 1)
                    } else {
                        random_positive_rational(rng, 5, 2)
                    }
                })
                .collect();
            let f = QPoly::linear_form(&coeffs);
            if !f.is_zero() {
                break f;
            }
        };
        out = &out * &form;
    }
    out
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix<Rational> {
    let mut vals = Vec::new();
    for _ in 0..n * n {
        vals.push(random_rational(rng, 20, 10));
    }
    SymMatrix::from_fn(n, |i, j| vals[i * n + j].clone())
}

/// Dense matrix helpers for congruence tests.
pub type Mat = Vec<Vec<Rational>>;

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (r, mid, c) = (a.len(), b.len(), b[0].len());
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let mut acc = rat(0, 1);
                    for k in 0..mid {
                        acc += &a[i][k] * &b[k][j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_transpose(a: &Mat) -> Mat {
    let (r, c) = (a.len(), a[0].len());
    (0..c).map(|j| (0..r).map(|i| a[i][j].clone()).collect()).collect()
}

/// Random invertible matrix: a product of elementary row operations applied
/// to the identity.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut m: Mat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat(1, 1) } else { rat(0, 1) })
                .collect()
        })
        .collect();
    for _ in 0..3 * n {
        match rng.gen_range(0..3u32) {
            0 => {
                // add a multiple of one row to another
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if n > 1 {
                    while j == i {
                        j = rng.gen_range(0..n);
                    }
                    let c = random_rational(rng, 3, 2);
                    for k in 0..n {
                        let add = &c * &m[j][k];
                        m[i][k] = &m[i][k] + &add;
                    }
                }
            }
            1 => {
                // scale a row by a nonzero rational
                let i = rng.gen_range(0..n);
                let c = loop {
                    let c = random_rational(rng, 3, 2);
                    if !c.is_zero() {
                        break c;
                    }
                };
                for k in 0..n {
                    m[i][k] = &m[i][k] * &c;
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                m.swap(i, j);
            }
        }
    }
    m
}

/// Congruence SᵀAS as a SymMatrix.
pub fn congruence(a: &SymMatrix<Rational>, s: &Mat) -> SymMatrix<Rational> {
    let n = a.n();
    let dense: Mat = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let st = mat_transpose(s);
    let prod = mat_mul(&mat_mul(&st, &dense), s);
    SymMatrix::from_rows(&prod).expect("congruence of symmetric is symmetric")
}

/// Polynomial helper: build from sparse term descriptions.
#[allow(clippy::type_complexity)]
pub fn qpoly(n: usize, terms: &[(&[(u32, u32)], (i64, i64))]) -> QPoly {
    Polynomial::from_terms(
        n,
        terms
            .iter()
            .map(|(m, (p, q))| (Monomial::new(m.iter().copied()), rat(*p, *q))),
    )
    .unwrap()
}

// ---------------------------------------------------------------------------
// depressed-cubic oracles shared by the directional and acceptance suites

use lorentzian::unipoly::{real_root_count_endpoints, Endpoint};
use lorentzian::{rat_int, QUniPoly, UniPoly};
use num_integer::Integer;
use num_traits::Signed;

/// g(z) = −3z⁴ + 6cz − b², the sign-equivalent numerator of (log f)'' for
/// f = z³ + bz + c.
pub fn depressed_g(b: &Rational, c: &Rational) -> QUniPoly {
    UniPoly::from_coeffs(vec![
        -(b * b),
        rat_int(6) * c,
        Rational::zero(),
        Rational::zero(),
        rat_int(-3),
    ])
}

/// Exact decision of max_{z ≥ 0} g(z) > 0 by root counting: with
/// g(0) = −b² ≤ 0 and g → −∞, a positive value on the ray means two distinct
/// positive roots (b ≠ 0), or c > 0 when b = 0.
pub fn depressed_g_takes_positive_value(b: &Rational, c: &Rational) -> bool {
    if b.is_zero() {
        return c.is_positive();
    }
    let g = depressed_g(b, c);
    let zero = Rational::zero();
    real_root_count_endpoints(&g, Endpoint::Value(&zero), Endpoint::PosInf).unwrap() >= 2
}

/// Bracket the maximizer z* = (c/2)^(1/3) between adjacent grid points with
/// denominator `den`, using exact integer cube roots.
pub fn bracket_depressed_maximizer(c: &Rational, den: i64) -> (Rational, Rational) {
    let scaled = c / rat_int(2) * rat_int(den).pow(3);
    let mut t = scaled.numer().div_floor(scaled.denom()).cbrt();
    while Rational::from_integer((t.clone() + 1i32).pow(3u32)) <= scaled {
        t += 1;
    }
    while t.is_positive() && Rational::from_integer(t.clone().pow(3u32)) > scaled {
        t -= 1;
    }
    (
        Rational::new(t.clone(), den.into()),
        Rational::new(t + 1, den.into()),
    )
}

/// Exhaustive grid scan of g over [0, hi] with step 1/64, plus the two points
/// bracketing the analytic maximizer.
pub fn depressed_grid_detects_positive(b: &Rational, c: &Rational) -> bool {
    let g = depressed_g(b, c);
    let hi = rat_int(4) * if c > &rat_int(1) { c.clone() } else { rat_int(1) };
    let steps = (&hi * rat_int(64)).to_integer();
    let step = rat(1, 64);
    let mut z = Rational::zero();
    let mut i = lorentzian::Int::from(0);
    while i <= steps {
        if g.eval(&z).is_positive() {
            return true;
        }
        z += &step;
        i += 1;
    }
    let (lo, hi_b) = bracket_depressed_maximizer(c, 64);
    g.eval(&lo).is_positive() || g.eval(&hi_b).is_positive()
}
