//! Exact constructors for the graph-encoded hard instances: the stability
//! gadget (a cubic whose real stability encodes ω(G) ≤ k), the quartic
//! log-concavity gadget, the z-direction gadget, degree lifts, and all the
//! intermediate rational parameters (q_G, a(k), ℓ(k), N, ε, M, b_G, γ).

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::directional::{a_squared, build_directional_gadget, DirectionalGadget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{LinearMap, Monomial, Polynomial};
use crate::sqrt::{ceil_of_scaled_sqrt, compare_to_sqrt};
use crate::{Int, QPoly, Rational};

/// q_G(x, y) = Σ_{(i,j)∈E} x_i x_j y_ij in n + |E| variables: the x-block
/// first, then one y variable per edge in sorted edge order.
pub fn build_q_g(g: &Graph) -> QPoly {
    let n = g.n();
    let mut q = Polynomial::zero(n + g.edge_count());
    for (e, (i, j)) in g.edges().enumerate() {
        let y = (n + e) as u32;
        q.add_term(
            Monomial::new([(i, 1), (j, 1), (y, 1)]),
            Rational::one(),
        );
    }
    q
}

/// Variable names for q_G, 1-indexed like the construction is usually
/// written: x1..xn then y{i}_{j} per edge.
pub fn q_g_variable_names(g: &Graph) -> Vec<String> {
    let mut names: Vec<String> = (1..=g.n()).map(|i| format!("x{i}")).collect();
    names.extend(g.edges().map(|(i, j)| format!("y{}_{}", i + 1, j + 1)));
    names
}

/// ℓ(k) = ⌈8n²·a(k)⌉ / 8n², where n is the number of variables of q_G and
/// a(k) = √((2/27)(1 − 1/k)). Rational, and sandwiched in [a(k), a(k+1)).
pub fn ell_of_k(num_vars_of_q: usize, k: i64) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidK {
            k,
            reason: "ℓ(k) needs k ≥ 1",
        });
    }
    let denom = Int::from(8 * (num_vars_of_q as i64) * (num_vars_of_q as i64));
    let num = ceil_of_scaled_sqrt(&a_squared(k as usize), &denom)?;
    Ok(Rational::new(num, denom))
}

/// Exact check that a(k) ≤ ℓ(k) < a(k+1); the upper comparison is skipped at
/// k = n where no (k+1)-clique fits.
pub fn sandwich_check(n: usize, k: usize) -> bool {
    assert!(k >= 1 && k <= n, "sandwich_check needs 1 ≤ k ≤ n");
    let ell = ell_of_k(n, k as i64).expect("k validated");
    let lower = compare_to_sqrt(&ell, &a_squared(k)).expect("nonnegative")
        != std::cmp::Ordering::Less;
    if k == n {
        return lower;
    }
    let upper = compare_to_sqrt(&ell, &a_squared(k + 1)).expect("nonnegative")
        == std::cmp::Ordering::Less;
    lower && upper
}

/// A constructed stability instance: p is hyperbolic along the apex
/// direction iff ω(G) ≤ k iff p̃ = p(Mx) is real stable.
#[derive(Debug, Clone)]
pub struct StabilityGadget {
    pub graph: Graph,
    pub k: usize,
    pub ell: Rational,
    /// p(x0, x, y) = x0³ − 3x0(‖x‖² + ‖y‖²) + 2 q_G(x, y)/ℓ, apex first.
    pub p: QPoly,
    /// Largest |coefficient| of 2 q_G/ℓ.
    pub max_coeff: Rational,
    pub epsilon: Rational,
    /// (m+1)×2m matrix with columns e0 ± ε·e_i.
    pub map: LinearMap<Rational>,
    /// p ∘ M in 2m variables: the z-block (e0 + ε e_i) then the w-block.
    pub p_tilde: QPoly,
}

impl StabilityGadget {
    /// Number of non-apex variables (n + |E|).
    pub fn m(&self) -> usize {
        self.p.num_vars() - 1
    }

    /// Admissible open upper bound for ε: min(1/(2N·m³), 1/2).
    pub fn epsilon_bound(&self) -> Rational {
        epsilon_bound(&self.max_coeff, self.m())
    }

    /// Exact positivity of p(‖x‖, εx) for nonzero x, decided without
    /// computing the square root: the value is s·S·(1−3ε²) + B with
    /// s = √S, S = ‖x‖², B = (2/ℓ)ε³ q_G(x).
    pub fn positive_on_scaled_sphere_at(&self, x: &[Rational]) -> Result<bool> {
        let m = self.m();
        if x.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: x.len(),
            });
        }
        let s2: Rational = x.iter().map(|v| v * v).sum();
        if s2.is_zero() {
            return Err(Error::NonPositiveAtPoint);
        }
        let q = build_q_g(&self.graph).evaluate(x)?;
        let eps3 = &self.epsilon * &self.epsilon * &self.epsilon;
        let b = Rational::from_integer(2.into()) / &self.ell * eps3 * q;
        if !b.is_negative() {
            return Ok(true);
        }
        let one_minus = Rational::one()
            - Rational::from_integer(3.into()) * &self.epsilon * &self.epsilon;
        // positive iff s > |B| / (S (1 − 3ε²))
        let threshold = -b / (&s2 * one_minus);
        Ok(compare_to_sqrt(&threshold, &s2)? == std::cmp::Ordering::Less)
    }

    /// A preimage of z under M (M has full row rank), in closed form from
    /// the diagonal structure of M·Mᵀ.
    pub fn lift_point(&self, z: &[Rational]) -> Result<Vec<Rational>> {
        let m = self.m();
        if z.len() != m + 1 {
            return Err(Error::DimensionMismatch {
                expected: m + 1,
                found: z.len(),
            });
        }
        let two_m = Rational::from_integer(Int::from(2 * m as i64));
        let two_eps = Rational::from_integer(2.into()) * &self.epsilon;
        let base = &z[0] / &two_m;
        let mut out = Vec::with_capacity(2 * m);
        for zi in &z[1..] {
            out.push(&base + zi / &two_eps);
        }
        for zi in &z[1..] {
            out.push(&base - zi / &two_eps);
        }
        Ok(out)
    }
}

fn epsilon_bound(max_coeff: &Rational, m: usize) -> Rational {
    let half = crate::rat(1, 2);
    if max_coeff.is_zero() {
        return half;
    }
    let m3 = Int::from(m as i64).pow(3);
    let cap = Rational::one() / (Rational::from_integer(2.into()) * max_coeff * m3);
    cap.min(half)
}

fn default_epsilon(bound: &Rational) -> Rational {
    let ten = Rational::from_integer(10.into());
    let mut eps = crate::rat(1, 10);
    while &eps >= bound {
        eps /= &ten;
    }
    eps
}

/// Build the full stability instance for (G, k), 2 ≤ k ≤ n. With no edges
/// the cubic part vanishes and any admissible ε works; k = 1 is rejected
/// because ℓ(1) = 0 makes q_G/ℓ undefined.
pub fn build_stability_gadget(
    graph: &Graph,
    k: i64,
    epsilon: Option<Rational>,
) -> Result<StabilityGadget> {
    let n = graph.n();
    if k < 2 {
        return Err(Error::InvalidK {
            k,
            reason: "ℓ(1) = 0 leaves q_G/ℓ undefined; decide k = 1 by checking for edges",
        });
    }
    if k as usize > n {
        return Err(Error::InvalidK {
            k,
            reason: "k exceeds the vertex count",
        });
    }
    let q = build_q_g(graph);
    let m = q.num_vars();
    let ell = ell_of_k(m, k)?;
    let two_over_ell = Rational::from_integer(2.into()) / &ell;

    // p = x0³ − 3 x0 Σ v_i² + (2/ℓ) q, apex variable first
    let mut p = Polynomial::zero(1 + m);
    p.add_term(Monomial::new([(0, 3)]), Rational::one());
    for i in 1..=m as u32 {
        p.add_term(
            Monomial::new([(0, 1), (i, 2)]),
            Rational::from_integer((-3).into()),
        );
    }
    for (mono, c) in q.terms() {
        let shifted = Monomial::new(mono.iter().map(|(v, e)| (v + 1, e)));
        p.add_term(shifted, c * &two_over_ell);
    }

    let max_coeff = if graph.edge_count() == 0 {
        Rational::zero()
    } else {
        two_over_ell.clone()
    };
    let bound = epsilon_bound(&max_coeff, m);
    let epsilon = match epsilon {
        Some(e) => {
            if !e.is_positive() || e >= bound {
                return Err(Error::EpsilonOutOfRange);
            }
            e
        }
        None => default_epsilon(&bound),
    };

    // columns e0 + ε e_i (z-block) then e0 − ε e_i (w-block)
    let mut map = LinearMap::zero(m + 1, 2 * m);
    for j in 0..m {
        map.set(0, j, Rational::one());
        map.set(0, m + j, Rational::one());
        map.set(j + 1, j, epsilon.clone());
        map.set(j + 1, m + j, -epsilon.clone());
    }
    let p_tilde = p.substitute_linear(&map)?;

    Ok(StabilityGadget {
        graph: graph.clone(),
        k: k as usize,
        ell,
        p,
        max_coeff,
        epsilon,
        map,
        p_tilde,
    })
}

/// Names for p's variables: the apex x0, then x1..xn, then y{i}_{j}.
pub fn stability_p_variable_names(g: &Graph) -> Vec<String> {
    let mut names = vec!["x0".to_string()];
    names.extend(q_g_variable_names(g));
    names
}

/// Names for p̃'s variables: z-block then w-block, indexed like q_G.
pub fn stability_p_tilde_variable_names(g: &Graph) -> Vec<String> {
    let mut names = Vec::with_capacity(2 * (g.n() + g.edge_count()));
    for prefix in ["z", "w"] {
        for i in 1..=g.n() {
            names.push(format!("{prefix}{i}"));
        }
        for (i, j) in g.edges() {
            names.push(format!("{prefix}{}_{}", i + 1, j + 1));
        }
    }
    names
}

/// Multiply a homogeneous cubic by y^(d−3) in one appended variable; for
/// d = 3 the polynomial is returned unchanged. Stability is preserved.
pub fn lift_degree_stability(p: &QPoly, d: u32) -> Result<QPoly> {
    if !p.is_homogeneous() || p.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3 });
    }
    if d < 3 {
        return Err(Error::WrongDegree { expected: 3 });
    }
    if d == 3 {
        return Ok(p.clone());
    }
    let n = p.num_vars();
    let y = n as u32;
    Polynomial::from_terms(
        n + 1,
        p.terms()
            .map(|(m, c)| (m.mul(&Monomial::new([(y, d - 3)])), c.clone())),
    )
}

/// b_G(x; y) = −2k Σ_{ij∈E} x_i x_j y_i y_j − (1−k)(Σ x_i²)(Σ y_i²) in 2n
/// variables (x-block then y-block).
pub fn build_biquadratic(graph: &Graph, k: i64) -> Result<QPoly> {
    let n = graph.n();
    if k < 1 || k as usize > n {
        return Err(Error::InvalidK {
            k,
            reason: "the biquadratic form needs 1 ≤ k ≤ n",
        });
    }
    let mut b = Polynomial::zero(2 * n);
    let minus_2k = Rational::from_integer(Int::from(-2 * k));
    for (i, j) in graph.edges() {
        b.add_term(
            Monomial::new([(i, 1), (j, 1), (n as u32 + i, 1), (n as u32 + j, 1)]),
            minus_2k.clone(),
        );
    }
    let k_minus_1 = Rational::from_integer(Int::from(k - 1)); // −(1−k)
    if !k_minus_1.is_zero() {
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                b.add_term(
                    Monomial::new([(i, 2), (n as u32 + j, 2)]),
                    k_minus_1.clone(),
                );
            }
        }
    }
    Ok(b)
}

/// The quartic form f = b_G + (n²γ/2)(Σx_i⁴ + Σy_i⁴ + Σ_{i<j}x_i²x_j² +
/// Σ_{i<j}y_i²y_j²), where γ is the largest |coefficient| in the polynomial
/// matrix C(x,y) with C_ij = ∂²b/∂x_i∂y_j, computed symbolically.
pub fn build_quartic_convexity_form(graph: &Graph, k: i64) -> Result<(QPoly, Rational)> {
    let n = graph.n();
    let b = build_biquadratic(graph, k)?;
    let mut gamma = Rational::zero();
    for i in 0..n as u32 {
        for j in 0..n as u32 {
            let c = b.differentiate(&Monomial::new([(i, 1), (n as u32 + j, 1)]))?;
            if let Some(m) = c.max_abs_coeff() {
                gamma = gamma.max(m);
            }
        }
    }
    let scale = Rational::from_integer(Int::from((n * n) as i64)) * &gamma / Rational::from_integer(2.into());
    let mut f = b;
    if !scale.is_zero() {
        for block in 0..2u32 {
            let off = block * n as u32;
            for i in 0..n as u32 {
                f.add_term(Monomial::new([(off + i, 4)]), scale.clone());
                for j in i + 1..n as u32 {
                    f.add_term(
                        Monomial::new([(off + i, 2), (off + j, 2)]),
                        scale.clone(),
                    );
                }
            }
        }
    }
    Ok((f, gamma))
}

/// A constructed quartic log-concavity instance: g is log concave iff
/// ω(G) ≤ k.
#[derive(Debug, Clone)]
pub struct QuarticGadget {
    pub graph: Graph,
    pub k: usize,
    pub b: QPoly,
    pub gamma: Rational,
    pub f: QPoly,
    /// N: the largest coefficient of f (1 for the degenerate f = 0).
    pub max_coeff: Rational,
    /// g = N(z + Σ x_i)⁴ − f in 2n+1 variables, z last; all coefficients
    /// nonnegative.
    pub g: QPoly,
}

pub fn build_quartic_lc_gadget(graph: &Graph, k: i64) -> Result<QuarticGadget> {
    let n = graph.n();
    let b = build_biquadratic(graph, k)?;
    let (f, gamma) = build_quartic_convexity_form(graph, k)?;
    let max_coeff = match f.max_coeff() {
        None => Rational::one(), // f = 0: any N > 0 works
        Some(c) => c,
    };
    debug_assert!(max_coeff.is_positive());

    let vars = 2 * n + 1;
    let sum = Polynomial::linear_form(&vec![Rational::one(); vars]);
    let mut g = sum.pow(4).scale(&max_coeff);
    for (m, c) in f.terms() {
        g.add_term(m.clone(), -c.clone());
    }
    if !g.has_nonneg_coeffs() {
        return Err(Error::ConstructionFailure);
    }
    Ok(QuarticGadget {
        graph: graph.clone(),
        k: k as usize,
        b,
        gamma,
        f,
        max_coeff,
        g,
    })
}

impl QuarticGadget {
    /// The exact non-log-concavity witness for ω(G) > k: x the integer
    /// indicator of a maximum clique, y = 0, z = 1. The Hessian of g there
    /// has at least two positive eigenvalues. (The unit-norm clique point
    /// scales to the integer indicator because the Hessian is homogeneous of
    /// degree two in the point.)
    pub fn witness_point(&self, clique: &[u32]) -> Vec<Rational> {
        let n = self.graph.n();
        let mut w = vec![Rational::zero(); 2 * n + 1];
        for &v in clique {
            w[v as usize] = Rational::one();
        }
        w[2 * n] = Rational::one();
        w
    }

    pub fn variable_names(&self) -> Vec<String> {
        let n = self.graph.n();
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        names.extend((1..=n).map(|i| format!("y{i}")));
        names.push("z".to_string());
        names
    }
}

/// Multiply a nonnegative homogeneous quartic by z^(d−4) in one appended
/// variable; log-concavity status is preserved.
pub fn lift_degree_lc(f: &QPoly, d: u32) -> Result<QPoly> {
    if !f.is_homogeneous() || f.degree() != Some(4) {
        return Err(Error::WrongDegree { expected: 4 });
    }
    if !f.has_nonneg_coeffs() {
        return Err(Error::NegativeCoefficient);
    }
    if d < 4 {
        return Err(Error::WrongDegree { expected: 4 });
    }
    if d == 4 {
        return Ok(f.clone());
    }
    let n = f.num_vars();
    let z = n as u32;
    Polynomial::from_terms(
        n + 1,
        f.terms()
            .map(|(m, c)| (m.mul(&Monomial::new([(z, d - 4)])), c.clone())),
    )
}

/// A directional instance for (G, k): the gadget is built from q = q_G/ℓ(k)
/// when that is defined (always for k ≥ 2; for k = 1 only when G has no
/// edges, since ℓ(1) = 0). The exact verdict a(ω) ≤ ℓ is available either
/// way.
#[derive(Debug, Clone)]
pub struct DirectionalInstance {
    pub graph: Graph,
    pub k: usize,
    pub ell: Rational,
    pub gadget: Option<DirectionalGadget>,
}

pub fn build_directional_instance(graph: &Graph, k: i64) -> Result<DirectionalInstance> {
    let n = graph.n();
    if k < 1 || k as usize > n {
        return Err(Error::InvalidK {
            k,
            reason: "directional instances need 1 ≤ k ≤ n",
        });
    }
    let q_g = build_q_g(graph);
    let ell = ell_of_k(q_g.num_vars(), k)?;
    let gadget = if q_g.is_zero() {
        Some(build_directional_gadget(&q_g)?)
    } else if ell.is_zero() {
        None
    } else {
        let q = q_g.scale(&(Rational::one() / &ell));
        Some(build_directional_gadget(&q)?)
    };
    Ok(DirectionalInstance {
        graph: graph.clone(),
        k: k as usize,
        ell,
        gadget,
    })
}

pub fn directional_variable_names(g: &Graph) -> Vec<String> {
    let mut names = q_g_variable_names(g);
    names.push("z".to_string());
    names
}

/// JSON sidecar describing an emitted gadget polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetSidecar {
    pub construction: String,
    pub n: usize,
    pub k: usize,
    pub ell: Option<String>,
    #[serde(rename = "N")]
    pub max_coeff: Option<String>,
    pub epsilon: Option<String>,
    pub variable_names: Vec<String>,
}

impl GadgetSidecar {
    pub fn for_stability(g: &StabilityGadget) -> Self {
        GadgetSidecar {
            construction: "stability".to_string(),
            n: g.graph.n(),
            k: g.k,
            ell: Some(g.ell.to_string()),
            max_coeff: Some(g.max_coeff.to_string()),
            epsilon: Some(g.epsilon.to_string()),
            variable_names: stability_p_tilde_variable_names(&g.graph),
        }
    }

    pub fn for_quartic(g: &QuarticGadget) -> Self {
        GadgetSidecar {
            construction: "quartic-lc".to_string(),
            n: g.graph.n(),
            k: g.k,
            ell: None,
            max_coeff: Some(g.max_coeff.to_string()),
            epsilon: None,
            variable_names: g.variable_names(),
        }
    }

    pub fn for_directional(inst: &DirectionalInstance) -> Self {
        GadgetSidecar {
            construction: "directional".to_string(),
            n: inst.graph.n(),
            k: inst.k,
            ell: Some(inst.ell.to_string()),
            max_coeff: None,
            epsilon: None,
            variable_names: directional_variable_names(&inst.graph),
        }
    }
}
