//! Structural analysis of finite braces: ideals, the socle, the brace
//! series, simplicity, quotients and the second isomorphism theorem.

pub mod group;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::brace::{FiniteBrace, Meta};
use crate::error::Error;
use crate::limits::Limits;
use crate::morphism::{verify_morphism, BraceMap};
use crate::subset::Subset;

pub use group::{derived_length_mult, derived_series_mult, group_isomorphic, is_mult_nilpotent, GroupTable};

/// Additive subgroup generated by `gens`.
pub fn additive_closure(b: &FiniteBrace, gens: impl IntoIterator<Item = usize>) -> Subset {
    let mut set = Subset::zero(b.order());
    let mut members = vec![0usize];
    for g in gens {
        if set.contains(g) {
            continue;
        }
        // Adjoin g: the new subgroup is the union of the cosets k·g + old.
        let old = members.clone();
        let mut coset_rep = g;
        while !set.contains(coset_rep) {
            for &m in &old {
                let x = b.add(coset_rep, m);
                if set.insert(x) {
                    members.push(x);
                }
            }
            coset_rep = b.add(coset_rep, g);
        }
    }
    set
}

pub fn is_additive_subgroup(b: &FiniteBrace, s: &Subset) -> bool {
    s.contains(0) && s.iter().all(|x| s.iter().all(|y| s.contains(b.add(x, y))))
}

pub fn is_multiplicative_subgroup(b: &FiniteBrace, s: &Subset) -> bool {
    s.contains(0) && s.iter().all(|x| s.iter().all(|y| s.contains(b.mul(x, y))))
}

/// Closed under `+` and `·` and contains `0`.
pub fn is_subbrace(b: &FiniteBrace, s: &Subset) -> bool {
    is_additive_subgroup(b, s) && is_multiplicative_subgroup(b, s)
}

fn lambda_invariant(b: &FiniteBrace, s: &Subset) -> bool {
    (0..b.order()).all(|g| s.iter().all(|x| s.contains(b.lambda(g, x))))
}

/// An additive subgroup `I` with `λ_g(I) ⊆ I` for every `g`.
pub fn is_left_ideal(b: &FiniteBrace, s: &Subset) -> bool {
    is_additive_subgroup(b, s) && lambda_invariant(b, s)
}

/// A normal subgroup of `(B, ·)` with `λ_g(N) ⊆ N` for every `g`.
pub fn is_ideal(b: &FiniteBrace, s: &Subset) -> bool {
    is_multiplicative_subgroup(b, s)
        && (0..b.order()).all(|g| s.iter().all(|x| s.contains(b.mul(b.mul(g, x), b.inv(g)))))
        && lambda_invariant(b, s)
}

/// Smallest ideal containing `seed`.
///
/// Worklist fixed point: every element entering the set pushes its products
/// with the current members, its conjugates and its `λ`-images.
pub fn ideal_closure(b: &FiniteBrace, seed: &Subset) -> Subset {
    let n = b.order();
    let mut set = Subset::zero(n);
    let mut members = vec![0usize];
    let mut queue: Vec<usize> = seed.iter().filter(|&x| x != 0).collect();
    for &x in &queue {
        set.insert(x);
        members.push(x);
    }
    while let Some(x) = queue.pop() {
        let push = |y: usize, set: &mut Subset, members: &mut Vec<usize>, queue: &mut Vec<usize>| {
            if set.insert(y) {
                members.push(y);
                queue.push(y);
            }
        };
        for g in 0..n {
            push(b.lambda(g, x), &mut set, &mut members, &mut queue);
            push(b.mul(b.mul(g, x), b.inv(g)), &mut set, &mut members, &mut queue);
        }
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            push(b.mul(x, y), &mut set, &mut members, &mut queue);
            push(b.mul(y, x), &mut set, &mut members, &mut queue);
            i += 1;
        }
    }
    set
}

/// Ideal generated by a single element.
pub fn principal_ideal(b: &FiniteBrace, x: usize) -> Subset {
    ideal_closure(b, &Subset::from_elements(b.order(), [x]))
}

/// `I + J`, which is the join of two ideals.
pub fn ideal_join(b: &FiniteBrace, i: &Subset, j: &Subset) -> Subset {
    let mut out = Subset::empty(b.order());
    for x in i.iter() {
        for y in j.iter() {
            out.insert(b.add(x, y));
        }
    }
    out
}

/// Every ideal of `b`, sorted by size and then by members.
///
/// Every ideal is the join of the principal ideals of its elements, so the
/// lattice is the closure of the principal ideals under joins with
/// principal ideals.
pub fn all_ideals(b: &FiniteBrace, limits: &Limits) -> Result<Vec<Subset>, Error> {
    let n = b.order();
    if n > limits.analysis_cap {
        return Err(Error::AnalysisCap { order: n, cap: limits.analysis_cap });
    }
    let mut principal: Vec<Subset> = Vec::new();
    let mut seen_principal = BTreeSet::new();
    for x in 1..n {
        // An element already inside a known principal ideal may still
        // generate a smaller one, so every element gets its own closure.
        let p = principal_ideal(b, x);
        if seen_principal.insert(p.clone()) {
            principal.push(p);
        }
    }
    let mut lattice: BTreeSet<Subset> = seen_principal.clone();
    lattice.insert(Subset::zero(n));
    let mut queue: Vec<Subset> = lattice.iter().cloned().collect();
    while let Some(ideal) = queue.pop() {
        for p in &principal {
            if p.is_subset(&ideal) {
                continue;
            }
            let joined = ideal_join(b, &ideal, p);
            if lattice.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let mut out: Vec<Subset> = lattice.into_iter().collect();
    out.sort_by(|a, c| a.len().cmp(&c.len()).then_with(|| a.cmp(c)));
    Ok(out)
}

/// `{a | a·b = a + b for all b}`.
pub fn socle(b: &FiniteBrace) -> Subset {
    let n = b.order();
    Subset::from_elements(n, (0..n).filter(|&a| (0..n).all(|x| b.mul(a, x) == b.add(a, x))))
}

/// Additive subgroup generated by `{a * c | a ∈ left, c ∈ right}`.
pub fn star_span(b: &FiniteBrace, left: &Subset, right: &Subset) -> Subset {
    let mut products = Subset::empty(b.order());
    for a in left.iter() {
        for c in right.iter() {
            products.insert(b.star(a, c));
        }
    }
    additive_closure(b, products.iter())
}

fn series(b: &FiniteBrace, next: impl Fn(&Subset) -> Subset) -> Vec<Subset> {
    let mut terms = vec![Subset::full(b.order())];
    loop {
        let last = terms.last().expect("series is nonempty");
        let term = next(last);
        if &term == last {
            return terms;
        }
        terms.push(term);
    }
}

/// `B¹ = B, Bⁿ⁺¹ = B * Bⁿ`, up to stabilisation. Entry `k` is `Bᵏ⁺¹`.
pub fn left_series(b: &FiniteBrace) -> Vec<Subset> {
    let full = Subset::full(b.order());
    series(b, |last| star_span(b, &full, last))
}

/// `B⁽¹⁾ = B, B⁽ⁿ⁺¹⁾ = B⁽ⁿ⁾ * B`, up to stabilisation. Entry `k` is `B⁽ᵏ⁺¹⁾`.
pub fn right_series(b: &FiniteBrace) -> Vec<Subset> {
    let full = Subset::full(b.order());
    series(b, |last| star_span(b, last, &full))
}

/// `d₀ = B, d₁ = B², dᵢ₊₁ = dᵢ²`, up to stabilisation. Entry `k` is `dₖ`.
pub fn d_series(b: &FiniteBrace) -> Vec<Subset> {
    series(b, |last| star_span(b, last, last))
}

/// `B² = B * B`.
pub fn square(b: &FiniteBrace) -> Subset {
    let full = Subset::full(b.order());
    star_span(b, &full, &full)
}

pub fn is_left_nilpotent(b: &FiniteBrace) -> bool {
    left_series(b).last().is_some_and(Subset::is_zero)
}

pub fn is_right_nilpotent(b: &FiniteBrace) -> bool {
    right_series(b).last().is_some_and(Subset::is_zero)
}

pub fn is_solvable(b: &FiniteBrace) -> bool {
    d_series(b).last().is_some_and(Subset::is_zero)
}

/// `B² = B`.
pub fn is_perfect(b: &FiniteBrace) -> bool {
    square(b).is_full()
}

pub fn is_trivial(b: &FiniteBrace) -> bool {
    b.is_trivial()
}

/// Nonzero brace whose only ideals are `{0}` and `B`, decided by closing
/// every nonzero singleton.
pub fn is_simple(b: &FiniteBrace) -> bool {
    b.order() > 1 && (1..b.order()).all(|x| principal_ideal(b, x).is_full())
}

/// `B/I` with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub brace: FiniteBrace,
    pub projection: BraceMap,
    /// Smallest element of each class, indexed by class.
    pub representatives: Vec<usize>,
}

/// The quotient by an ideal. Classes are numbered in increasing order of
/// their smallest element.
pub fn quotient(b: &FiniteBrace, ideal: &Subset, limits: &Limits) -> Result<Quotient, Error> {
    if !is_ideal(b, ideal) {
        return Err(Error::precondition("the subset is not an ideal"));
    }
    let n = b.order();
    let mut class = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(x);
        for i in ideal.iter() {
            let y = b.add(x, i);
            class[y] = id;
        }
        // For an ideal the additive and multiplicative cosets coincide.
        debug_assert!(ideal.iter().all(|i| class[b.mul(x, i)] == id));
    }
    if let Some(x) = (0..n).find(|&x| ideal.iter().any(|i| class[b.mul(x, i)] != class[x])) {
        return Err(Error::precondition(alloc::format!("additive and multiplicative cosets of {x} differ")));
    }
    let m = representatives.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &x in &representatives {
        for &y in &representatives {
            add.push(class[b.add(x, y)] as u16);
            mul.push(class[b.mul(x, y)] as u16);
        }
    }
    let mut meta = Meta::new();
    meta.insert("family".into(), "quotient".into());
    meta.insert("parent_order".into(), alloc::format!("{n}"));
    meta.insert("ideal".into(), alloc::format!("{:?}", ideal.to_vec()));
    meta.insert("projection".into(), alloc::format!("{:?}", class));
    let brace = FiniteBrace::from_tables(m, add, mul, meta, limits)?;
    let projection = BraceMap::new(n, m, class.iter().map(|&c| c as u16).collect())?;
    let report = verify_morphism(b, &brace, &projection)?;
    debug_assert!(report.is_homomorphism() && report.surjectivity_failure.is_none());
    Ok(Quotient { brace, projection, representatives })
}

/// A sub-brace as a brace of its own; element `k` of the result is the
/// `k`-th smallest member of `h`.
pub fn subbrace(b: &FiniteBrace, h: &Subset, limits: &Limits) -> Result<(FiniteBrace, Vec<usize>), Error> {
    if !is_subbrace(b, h) {
        return Err(Error::precondition("the subset is not a sub-brace"));
    }
    let elements = h.to_vec();
    let mut index = vec![usize::MAX; b.order()];
    for (k, &x) in elements.iter().enumerate() {
        index[x] = k;
    }
    let m = elements.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &x in &elements {
        for &y in &elements {
            add.push(index[b.add(x, y)] as u16);
            mul.push(index[b.mul(x, y)] as u16);
        }
    }
    let mut meta = Meta::new();
    meta.insert("family".into(), "subbrace".into());
    meta.insert("elements".into(), alloc::format!("{elements:?}"));
    Ok((FiniteBrace::from_tables(m, add, mul, meta, limits)?, elements))
}

/// `H·N = {h·n}`.
pub fn product_set(b: &FiniteBrace, h: &Subset, n: &Subset) -> Subset {
    let mut out = Subset::empty(b.order());
    for x in h.iter() {
        for y in n.iter() {
            out.insert(b.mul(x, y));
        }
    }
    out
}

/// Builds `HN/N` and `H/(H ∩ N)` and checks that `h(H∩N) ↦ hN` is an
/// isomorphism of braces.
pub fn verify_second_iso(b: &FiniteBrace, h: &Subset, n: &Subset, limits: &Limits) -> Result<bool, Error> {
    if !is_subbrace(b, h) {
        return Err(Error::precondition("H is not a sub-brace"));
    }
    if !is_ideal(b, n) {
        return Err(Error::precondition("N is not an ideal"));
    }
    let hn = product_set(b, h, n);
    if !is_subbrace(b, &hn) {
        return Ok(false);
    }
    let (hn_brace, hn_elems) = subbrace(b, &hn, limits)?;
    let (h_brace, h_elems) = subbrace(b, h, limits)?;
    let position = |elems: &[usize], x: usize| elems.binary_search(&x).expect("member");
    let n_in_hn = Subset::from_elements(hn_brace.order(), n.iter().map(|x| position(&hn_elems, x)));
    let meet = h.intersection(n);
    let meet_in_h = Subset::from_elements(h_brace.order(), meet.iter().map(|x| position(&h_elems, x)));
    if !is_ideal(&h_brace, &meet_in_h) {
        return Ok(false);
    }
    let top = quotient(&hn_brace, &n_in_hn, limits)?;
    let bottom = quotient(&h_brace, &meet_in_h, limits)?;
    if top.brace.order() != bottom.brace.order() {
        return Ok(false);
    }
    let map = BraceMap::from_fn(bottom.brace.order(), top.brace.order(), |c| {
        let x = h_elems[bottom.representatives[c]];
        top.projection.apply(position(&hn_elems, x))
    })?;
    Ok(verify_morphism(&bottom.brace, &top.brace, &map)?.is_isomorphism())
}

/// Sizes of the terms of a series.
pub fn sizes(series: &[Subset]) -> Vec<usize> {
    series.iter().map(Subset::len).collect()
}

/// Summary used by the analysis report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisSummary {
    pub order: usize,
    pub simple: bool,
    pub perfect: bool,
    pub trivial: bool,
    pub solvable: bool,
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    pub socle_size: usize,
    pub left_series_sizes: Vec<usize>,
    pub right_series_sizes: Vec<usize>,
    pub d_series_sizes: Vec<usize>,
    pub derived_length_mult: Option<usize>,
    pub ideal_count: Option<usize>,
}

/// Runs every analysis; the ideal lattice only when `with_ideals` is set.
pub fn summarize(b: &FiniteBrace, with_ideals: bool, limits: &Limits) -> Result<AnalysisSummary, Error> {
    let left = left_series(b);
    let right = right_series(b);
    let d = d_series(b);
    let ideal_count = if with_ideals { Some(all_ideals(b, limits)?.len()) } else { None };
    Ok(AnalysisSummary {
        order: b.order(),
        simple: is_simple(b),
        // B² is the second left term; the series stops at once iff B² = B.
        perfect: left.len() == 1,
        trivial: b.is_trivial(),
        solvable: d.last().is_some_and(Subset::is_zero),
        left_nilpotent: left.last().is_some_and(Subset::is_zero),
        right_nilpotent: right.last().is_some_and(Subset::is_zero),
        socle_size: socle(b).len(),
        left_series_sizes: sizes(&left),
        right_series_sizes: sizes(&right),
        d_series_sizes: sizes(&d),
        derived_length_mult: derived_length_mult(b),
        ideal_count,
    })
}
