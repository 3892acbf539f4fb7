//! Semidirect, asymmetric and wreath products of braces.
//!
//! Pairs `(t, s) ∈ T × S` are encoded as `t·|S| + s`, so the left factor is
//! the most significant digit, as for [`direct_product`](crate::brace::direct_product).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{additive_closure, is_simple};
use crate::brace::{FiniteBrace, Meta};
use crate::error::Error;
use crate::limits::Limits;
use crate::morphism::{is_automorphism, BraceMap};

/// Above this order of `T` the general cocycle compatibility condition is
/// checked on random triples instead of exhaustively (unless
/// [`Limits::force_full`] is set).
pub const GENERAL_COCYCLE_FULL_CHECK_MAX: usize = 512;

/// A homomorphism `α: (S, ·) → Aut(T, +, ·)` stored as one permutation of
/// `T` per element of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraceAction {
    actor_order: usize,
    target_order: usize,
    perms: Vec<Vec<u16>>,
}

impl BraceAction {
    /// Checks only the shape: one row of in-range entries per actor element.
    /// The algebraic conditions are checked by [`validate_action`].
    pub fn new(actor_order: usize, target_order: usize, perms: Vec<Vec<u16>>) -> Result<Self, Error> {
        if perms.len() != actor_order {
            return Err(Error::InvalidAction(ActionViolation::Shape(format!(
                "{} permutations for an actor of order {actor_order}",
                perms.len()
            ))));
        }
        for (s, row) in perms.iter().enumerate() {
            if row.len() != target_order || row.iter().any(|&v| v as usize >= target_order) {
                return Err(Error::InvalidAction(ActionViolation::Shape(format!(
                    "permutation {s} is not a table on {target_order} elements"
                ))));
            }
        }
        Ok(BraceAction { actor_order, target_order, perms })
    }

    /// `α_s(t) = f(s, t)`.
    pub fn from_fn(actor_order: usize, target_order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, Error> {
        let perms = (0..actor_order).map(|s| (0..target_order).map(|t| f(s, t) as u16).collect()).collect();
        Self::new(actor_order, target_order, perms)
    }

    /// Every `α_s` is the identity.
    pub fn trivial(actor_order: usize, target_order: usize) -> Self {
        BraceAction { actor_order, target_order, perms: vec![(0..target_order as u16).collect(); actor_order] }
    }

    pub fn actor_order(&self) -> usize {
        self.actor_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// `α_s(t)`.
    #[inline]
    pub fn apply(&self, s: usize, t: usize) -> usize {
        self.perms[s][t] as usize
    }

    pub fn perms(&self) -> &[Vec<u16>] {
        &self.perms
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(t, &v)| t == v as usize))
    }
}

/// The first reason an action table is not a valid brace action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionViolation {
    Shape(String),
    NotPermutation { s: usize },
    NotAdditive { s: usize, a: usize, b: usize },
    NotMultiplicative { s: usize, a: usize, b: usize },
    /// `α_{s₁·s₂}(t) ≠ α_{s₁}(α_{s₂}(t))`.
    NotHomomorphism { s1: usize, s2: usize, t: usize },
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionViolation::Shape(detail) => write!(f, "malformed action: {detail}"),
            ActionViolation::NotPermutation { s } => write!(f, "alpha_{s} is not a permutation"),
            ActionViolation::NotAdditive { s, a, b } => write!(f, "alpha_{s} is not additive at ({a}, {b})"),
            ActionViolation::NotMultiplicative { s, a, b } => {
                write!(f, "alpha_{s} is not multiplicative at ({a}, {b})")
            }
            ActionViolation::NotHomomorphism { s1, s2, t } => {
                write!(f, "alpha_({s1}·{s2}) != alpha_{s1} ∘ alpha_{s2} at {t}")
            }
        }
    }
}

/// Checks that every `α_s` is a brace automorphism of `t` and that
/// `s ↦ α_s` is a homomorphism from `(S, ·)`. Exhaustive.
pub fn validate_action(t: &FiniteBrace, s: &FiniteBrace, alpha: &BraceAction) -> Result<(), ActionViolation> {
    if alpha.actor_order != s.order() || alpha.target_order != t.order() {
        return Err(ActionViolation::Shape(format!(
            "action of an order-{} brace on an order-{} brace used with orders {} and {}",
            alpha.actor_order,
            alpha.target_order,
            s.order(),
            t.order()
        )));
    }
    let n = t.order();
    let mut seen = vec![false; n];
    for (si, perm) in alpha.perms.iter().enumerate() {
        seen.iter_mut().for_each(|x| *x = false);
        for &v in perm {
            if core::mem::replace(&mut seen[v as usize], true) {
                return Err(ActionViolation::NotPermutation { s: si });
            }
        }
        let p = |x: usize| perm[x] as usize;
        for a in 0..n {
            for b in 0..n {
                if p(t.add(a, b)) != t.add(p(a), p(b)) {
                    return Err(ActionViolation::NotAdditive { s: si, a, b });
                }
                if p(t.mul(a, b)) != t.mul(p(a), p(b)) {
                    return Err(ActionViolation::NotMultiplicative { s: si, a, b });
                }
            }
        }
    }
    for s1 in 0..s.order() {
        for s2 in 0..s.order() {
            let s12 = s.mul(s1, s2);
            if let Some(x) = (0..n).find(|&x| alpha.apply(s12, x) != alpha.apply(s1, alpha.apply(s2, x))) {
                return Err(ActionViolation::NotHomomorphism { s1, s2, t: x });
            }
        }
    }
    Ok(())
}

/// A normalized symmetric 2-cocycle `b: T × T → S`, stored densely.
///
/// `bilinear` declares that `b` is additive in each argument; it selects
/// the cheaper compatibility check in [`validate_cocycle`], and is itself
/// verified there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricCocycle {
    t_order: usize,
    s_order: usize,
    table: Vec<u16>,
    bilinear: bool,
}

impl SymmetricCocycle {
    /// Checks only the shape; see [`validate_cocycle`] for the laws.
    pub fn new(t_order: usize, s_order: usize, table: Vec<u16>, bilinear: bool) -> Result<Self, Error> {
        if table.len() != t_order * t_order {
            return Err(Error::InvalidCocycle(CocycleViolation::Shape(format!(
                "table has {} entries, expected {}",
                table.len(),
                t_order * t_order
            ))));
        }
        if let Some(&v) = table.iter().find(|&&v| v as usize >= s_order) {
            return Err(Error::InvalidCocycle(CocycleViolation::Shape(format!(
                "entry {v} out of range for a codomain of order {s_order}"
            ))));
        }
        Ok(SymmetricCocycle { t_order, s_order, table, bilinear })
    }

    pub fn from_fn(
        t_order: usize,
        s_order: usize,
        bilinear: bool,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, Error> {
        let table = (0..t_order).flat_map(|a| (0..t_order).map(move |c| (a, c))).map(|(a, c)| f(a, c) as u16).collect();
        Self::new(t_order, s_order, table, bilinear)
    }

    /// The zero cocycle (bilinear).
    pub fn zero(t_order: usize, s_order: usize) -> Self {
        SymmetricCocycle { t_order, s_order, table: vec![0; t_order * t_order], bilinear: true }
    }

    pub fn t_order(&self) -> usize {
        self.t_order
    }

    pub fn s_order(&self) -> usize {
        self.s_order
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    pub fn is_bilinear(&self) -> bool {
        self.bilinear
    }

    #[inline]
    pub fn get(&self, t1: usize, t2: usize) -> usize {
        self.table[t1 * self.t_order + t2] as usize
    }

    /// Whether every `t ≠ 0` pairs non-trivially with some `t'`.
    pub fn is_nondegenerate(&self) -> bool {
        (1..self.t_order).all(|a| (0..self.t_order).any(|c| self.get(a, c) != 0))
    }
}

/// The first failed cocycle or compatibility law, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleViolation {
    Shape(String),
    /// `b(0, 0) ≠ 0`.
    NotNormalized,
    NotSymmetric { t1: usize, t2: usize },
    /// `b(t₁+t₂,t₃) + b(t₁,t₂) ≠ b(t₁,t₂+t₃) + b(t₂,t₃)`.
    CocycleLaw { t1: usize, t2: usize, t3: usize },
    /// Declared bilinear but `b(t₁+t₂,t₃) ≠ b(t₁,t₃) + b(t₂,t₃)`.
    NotBilinear { t1: usize, t2: usize, t3: usize },
    /// `λ_s(b(t₂,t₃)) ≠ b(α_s(t₂), α_s(t₃))`.
    CondAlpha { s: usize, t2: usize, t3: usize },
    /// `b(t₂,t₃) ≠ b(λ_{t₁}(t₂), λ_{t₁}(t₃))`.
    CondLambda { t1: usize, t2: usize, t3: usize },
    /// `s·b(t₂,t₃) + b(t₁·α_s(t₂+t₃), t₁) ≠ b(t₁·α_s(t₂), t₁·α_s(t₃)) + s`.
    Compatibility { s: usize, t1: usize, t2: usize, t3: usize },
}

impl fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleViolation::Shape(detail) => write!(f, "malformed cocycle: {detail}"),
            CocycleViolation::NotNormalized => write!(f, "b(0, 0) != 0"),
            CocycleViolation::NotSymmetric { t1, t2 } => write!(f, "b({t1}, {t2}) != b({t2}, {t1})"),
            CocycleViolation::CocycleLaw { t1, t2, t3 } => write!(f, "cocycle law fails at ({t1}, {t2}, {t3})"),
            CocycleViolation::NotBilinear { t1, t2, t3 } => {
                write!(f, "declared bilinear but b({t1}+{t2}, {t3}) != b({t1}, {t3}) + b({t2}, {t3})")
            }
            CocycleViolation::CondAlpha { s, t2, t3 } => {
                write!(f, "lambda_{s}(b({t2}, {t3})) != b(alpha_{s}({t2}), alpha_{s}({t3}))")
            }
            CocycleViolation::CondLambda { t1, t2, t3 } => {
                write!(f, "b({t2}, {t3}) != b(lambda_{t1}({t2}), lambda_{t1}({t3}))")
            }
            CocycleViolation::Compatibility { s, t1, t2, t3 } => {
                write!(f, "compatibility with the action fails at s = {s}, t = ({t1}, {t2}, {t3})")
            }
        }
    }
}

/// Checks the cocycle laws and the compatibility of `b` with `α`.
///
/// For bilinear `b` the compatibility is the pair of conditions
/// `λ_s(b(t₂,t₃)) = b(α_s(t₂), α_s(t₃))` and
/// `b(t₂,t₃) = b(λ_{t₁}(t₂), λ_{t₁}(t₃))`, checked exhaustively. Otherwise
/// the general condition is checked over all `(s, t₁, t₂, t₃)` when
/// `|T| ≤` [`GENERAL_COCYCLE_FULL_CHECK_MAX`] and on
/// [`Limits::sample_triples`] random quadruples above.
pub fn validate_cocycle(
    t: &FiniteBrace,
    s: &FiniteBrace,
    b: &SymmetricCocycle,
    alpha: &BraceAction,
    limits: &Limits,
) -> Result<(), CocycleViolation> {
    if b.t_order != t.order() || b.s_order != s.order() {
        return Err(CocycleViolation::Shape(format!(
            "cocycle on orders ({}, {}) used with braces of orders ({}, {})",
            b.t_order,
            b.s_order,
            t.order(),
            s.order()
        )));
    }
    if alpha.actor_order != s.order() || alpha.target_order != t.order() {
        return Err(CocycleViolation::Shape(String::from("action does not match the braces")));
    }
    let n = t.order();
    if b.get(0, 0) != 0 {
        return Err(CocycleViolation::NotNormalized);
    }
    for t1 in 0..n {
        for t2 in 0..t1 {
            if b.get(t1, t2) != b.get(t2, t1) {
                return Err(CocycleViolation::NotSymmetric { t1, t2 });
            }
        }
    }
    for t1 in 0..n {
        for t2 in 0..n {
            let b12 = b.get(t1, t2);
            let sum12 = t.add(t1, t2);
            for t3 in 0..n {
                let lhs = s.add(b.get(sum12, t3), b12);
                let rhs = s.add(b.get(t1, t.add(t2, t3)), b.get(t2, t3));
                if lhs != rhs {
                    return Err(CocycleViolation::CocycleLaw { t1, t2, t3 });
                }
                if b.bilinear && b.get(sum12, t3) != s.add(b.get(t1, t3), b.get(t2, t3)) {
                    return Err(CocycleViolation::NotBilinear { t1, t2, t3 });
                }
            }
        }
    }
    if b.bilinear {
        for si in 0..s.order() {
            for t2 in 0..n {
                for t3 in 0..n {
                    if s.lambda(si, b.get(t2, t3)) != b.get(alpha.apply(si, t2), alpha.apply(si, t3)) {
                        return Err(CocycleViolation::CondAlpha { s: si, t2, t3 });
                    }
                }
            }
        }
        for t1 in 0..n {
            for t2 in 0..n {
                let l2 = t.lambda(t1, t2);
                for t3 in 0..n {
                    if b.get(t2, t3) != b.get(l2, t.lambda(t1, t3)) {
                        return Err(CocycleViolation::CondLambda { t1, t2, t3 });
                    }
                }
            }
        }
        return Ok(());
    }
    let check = |si: usize, t1: usize, t2: usize, t3: usize| -> bool {
        let lhs = s.add(s.mul(si, b.get(t2, t3)), b.get(t.mul(t1, alpha.apply(si, t.add(t2, t3))), t1));
        let rhs = s.add(b.get(t.mul(t1, alpha.apply(si, t2)), t.mul(t1, alpha.apply(si, t3))), si);
        lhs == rhs
    };
    if limits.force_full || n <= GENERAL_COCYCLE_FULL_CHECK_MAX {
        for si in 0..s.order() {
            for t1 in 0..n {
                for t2 in 0..n {
                    for t3 in 0..n {
                        if !check(si, t1, t2, t3) {
                            return Err(CocycleViolation::Compatibility { s: si, t1, t2, t3 });
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
        for _ in 0..limits.sample_triples {
            let si = rng.gen_range(0..s.order());
            let (t1, t2, t3) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if !check(si, t1, t2, t3) {
                return Err(CocycleViolation::Compatibility { s: si, t1, t2, t3 });
            }
        }
    }
    Ok(())
}

fn product_meta(family: &str, t: &FiniteBrace, s: &FiniteBrace) -> Meta {
    let mut meta = Meta::new();
    meta.insert("family".into(), family.into());
    meta.insert("factor_orders".into(), format!("[{}, {}]", t.order(), s.order()));
    meta
}

/// Tables of `T ⋊∘ S`, assuming the inputs were validated.
fn asymmetric_tables(t: &FiniteBrace, s: &FiniteBrace, b: &SymmetricCocycle, alpha: &BraceAction) -> (Vec<u16>, Vec<u16>) {
    let (nt, ns) = (t.order(), s.order());
    let n = nt * ns;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (t1, s1) = (x / ns, x % ns);
        for y in 0..n {
            let (t2, s2) = (y / ns, y % ns);
            add.push((t.add(t1, t2) * ns + s.add(s.add(s1, s2), b.get(t1, t2))) as u16);
            mul.push((t.mul(t1, alpha.apply(s1, t2)) * ns + s.mul(s1, s2)) as u16);
        }
    }
    (add, mul)
}

/// The asymmetric product `T ⋊∘ S` on `T × S` with
/// `(t₁,s₁) + (t₂,s₂) = (t₁+t₂, s₁+s₂+b(t₁,t₂))` and
/// `(t₁,s₁)·(t₂,s₂) = (t₁·α_{s₁}(t₂), s₁·s₂)`; `(t, s)` has index `t·|S| + s`.
pub fn asymmetric_product(
    t: &FiniteBrace,
    s: &FiniteBrace,
    b: &SymmetricCocycle,
    alpha: &BraceAction,
    limits: &Limits,
) -> Result<FiniteBrace, Error> {
    limits.check_order(t.order() as u128 * s.order() as u128)?;
    validate_action(t, s, alpha).map_err(Error::InvalidAction)?;
    validate_cocycle(t, s, b, alpha, limits).map_err(Error::InvalidCocycle)?;
    let (add, mul) = asymmetric_tables(t, s, b, alpha);
    FiniteBrace::from_tables(t.order() * s.order(), add, mul, product_meta("asymmetric_product", t, s), limits)
}

/// The semidirect product `T ⋊ S`: the asymmetric product with `b = 0`.
pub fn semidirect_product(t: &FiniteBrace, s: &FiniteBrace, alpha: &BraceAction, limits: &Limits) -> Result<FiniteBrace, Error> {
    limits.check_order(t.order() as u128 * s.order() as u128)?;
    validate_action(t, s, alpha).map_err(Error::InvalidAction)?;
    let (add, mul) = asymmetric_tables(t, s, &SymmetricCocycle::zero(t.order(), s.order()), alpha);
    FiniteBrace::from_tables(t.order() * s.order(), add, mul, product_meta("semidirect_product", t, s), limits)
}

/// `|G₂|^|G₁|`, refused by the size guard before anything is allocated.
fn function_count(g2: &FiniteBrace, g1: &FiniteBrace, limits: &Limits) -> Result<usize, Error> {
    let total = (g2.order() as u128)
        .checked_pow(g1.order() as u32)
        .and_then(|h| h.checked_mul(g1.order() as u128))
        .unwrap_or(u128::MAX);
    limits.check_order(total)?;
    Ok(g2.order().pow(g1.order() as u32))
}

/// Digits of the encoded function `f: G₁ → G₂`; `f(0)` is the most
/// significant base-`|G₂|` digit.
pub fn decode_function(index: usize, g2_order: usize, g1_order: usize) -> Vec<usize> {
    let mut values = vec![0; g1_order];
    let mut rest = index;
    for x in (0..g1_order).rev() {
        values[x] = rest % g2_order;
        rest /= g2_order;
    }
    values
}

/// Inverse of [`decode_function`].
pub fn encode_function(values: &[usize], g2_order: usize) -> usize {
    values.iter().fold(0, |acc, &v| acc * g2_order + v)
}

/// The brace `H₂` of all functions `G₁ → G₂` with pointwise operations.
pub fn function_brace(g2: &FiniteBrace, g1: &FiniteBrace, limits: &Limits) -> Result<FiniteBrace, Error> {
    let h = function_count(g2, g1, limits)?;
    let (m, k) = (g2.order(), g1.order());
    let decoded: Vec<Vec<usize>> = (0..h).map(|f| decode_function(f, m, k)).collect();
    let mut add = Vec::with_capacity(h * h);
    let mut mul = Vec::with_capacity(h * h);
    let mut buf = vec![0; k];
    for f1 in &decoded {
        for f2 in &decoded {
            for x in 0..k {
                buf[x] = g2.add(f1[x], f2[x]);
            }
            add.push(encode_function(&buf, m) as u16);
            for x in 0..k {
                buf[x] = g2.mul(f1[x], f2[x]);
            }
            mul.push(encode_function(&buf, m) as u16);
        }
    }
    let mut meta = product_meta("function_brace", g2, g1);
    meta.insert("factor_orders".into(), format!("[{m}^{k}]"));
    FiniteBrace::from_tables(h, add, mul, meta, limits)
}

/// The action `σ(g)(f)(x) = f(g⁻¹·x)` of `(G₁, ·)` on `H₂`.
pub fn translation_action(g2: &FiniteBrace, g1: &FiniteBrace, limits: &Limits) -> Result<BraceAction, Error> {
    let h = function_count(g2, g1, limits)?;
    let (m, k) = (g2.order(), g1.order());
    BraceAction::from_fn(k, h, |g, f| {
        let values = decode_function(f, m, k);
        let shifted: Vec<usize> = (0..k).map(|x| values[g1.mul(g1.inv(g), x)]).collect();
        encode_function(&shifted, m)
    })
}

/// The wreath product `G₂ ≀ G₁ = H₂ ⋊ G₁`. The element `(f, g)` has index
/// `f·|G₁| + g`, with `f` encoded as in [`decode_function`].
pub fn wreath_product(g2: &FiniteBrace, g1: &FiniteBrace, limits: &Limits) -> Result<FiniteBrace, Error> {
    let h2 = function_brace(g2, g1, limits)?;
    let sigma = translation_action(g2, g1, limits)?;
    let mut w = semidirect_product(&h2, g1, &sigma, limits)?;
    w.set_meta("family", "wreath_product");
    w.set_meta("factor_orders", format!("[{}, {}]", g2.order(), g1.order()));
    Ok(w)
}

/// The map `(f, g) ↦ (f∘α₁⁻¹, α₁(g))` on `G₂ ≀ G₁`, without verification.
pub(crate) fn induced_wreath_map(g2_order: usize, g1_order: usize, alpha1: &BraceMap) -> BraceMap {
    let inverse = alpha1.inverse().expect("automorphisms are bijective");
    let h = g2_order.pow(g1_order as u32);
    let mut buf = vec![0; g1_order];
    let image = (0..h * g1_order)
        .map(|x| {
            let (f, g) = (x / g1_order, x % g1_order);
            let values = decode_function(f, g2_order, g1_order);
            for (y, slot) in buf.iter_mut().enumerate() {
                *slot = values[inverse.apply(y)];
            }
            (encode_function(&buf, g2_order) * g1_order + alpha1.apply(g)) as u16
        })
        .collect();
    BraceMap::new(h * g1_order, h * g1_order, image).expect("indices in range")
}

/// The automorphism of `G₂ ≀ G₁` induced by an automorphism `α₁` of `G₁`:
/// `α₂(f, g) = (f∘α₁⁻¹, α₁(g))`. The result is verified to be an
/// automorphism of the wreath product.
pub fn induced_wreath_automorphism(
    g2: &FiniteBrace,
    g1: &FiniteBrace,
    alpha1: &BraceMap,
    limits: &Limits,
) -> Result<BraceMap, Error> {
    if alpha1.source_order() != g1.order() || !is_automorphism(g1, alpha1) {
        return Err(Error::precondition("the map is not an automorphism of G1"));
    }
    let w = wreath_product(g2, g1, limits)?;
    let alpha2 = induced_wreath_map(g2.order(), g1.order(), alpha1);
    if !is_automorphism(&w, &alpha2) {
        return Err(Error::precondition("the induced map is not an automorphism of the wreath product"));
    }
    Ok(alpha2)
}

/// Decides simplicity of `T ⋊∘ S` for trivial `T`, simple non-trivial `S`
/// and non-degenerate `b`, by testing whether `Σ_s im(α_s − id) = T`.
///
/// The hypotheses are checked and reported as
/// [`Error::Hypothesis`] naming the failing one; the action and the
/// cocycle are validated as for [`asymmetric_product`].
pub fn simplicity_by_image_criterion(
    t: &FiniteBrace,
    s: &FiniteBrace,
    b: &SymmetricCocycle,
    alpha: &BraceAction,
    limits: &Limits,
) -> Result<bool, Error> {
    validate_action(t, s, alpha).map_err(Error::InvalidAction)?;
    validate_cocycle(t, s, b, alpha, limits).map_err(Error::InvalidCocycle)?;
    if !t.is_trivial() {
        return Err(Error::hypothesis("T trivial", "T is not a trivial brace"));
    }
    if s.is_trivial() || !is_simple(s) {
        return Err(Error::hypothesis("S simple non-trivial", "S is trivial or not simple"));
    }
    if let Some(x) = (1..t.order()).find(|&x| (0..t.order()).all(|y| b.get(x, y) == 0)) {
        return Err(Error::hypothesis("b non-degenerate", format!("b({x}, t') = 0 for every t'")));
    }
    let images = (0..s.order()).flat_map(|si| (0..t.order()).map(move |x| t.sub(alpha.apply(si, x), x)));
    Ok(additive_closure(t, images).is_full())
}
