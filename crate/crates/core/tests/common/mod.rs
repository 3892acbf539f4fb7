//! Shared brace corpus and helpers for the integration tests.
#![allow(dead_code)]

use brace_core::analysis::{is_ideal, is_subbrace, left_series, principal_ideal, right_series, socle};
use brace_core::brace::trivial_brace;
use brace_core::families::{
    build_b3, build_concrete, build_generalized, build_h, build_h_prime_and_phi, build_matched_and_phi_prime,
    build_perfect_not_simple, build_wreath_simple, concrete_data, constants_ideal, GeneralizedBlock,
    GeneralizedData, MatchedData, MatchedFactor, QuadraticFormSpec,
};
use brace_core::analysis::quotient;
use brace_core::modular::Matrix;
use brace_core::products::{asymmetric_product, wreath_product, BraceAction, SymmetricCocycle};
use brace_core::{AbelianGroupSpec, FiniteBrace, Limits, Subset};

pub fn limits() -> Limits {
    Limits::default()
}

pub fn trivial(orders: &[usize]) -> FiniteBrace {
    trivial_brace(&AbelianGroupSpec::new(orders.to_vec()).unwrap(), &limits()).unwrap()
}

/// `Q(x, y) = xy` over `𝔽₂`.
pub fn xy_form() -> QuadraticFormSpec {
    QuadraticFormSpec::new(2, 1, 2, vec![0, 1, 0, 0]).unwrap()
}

/// The order-72 matched product data: `Q₁ = x²` over `ℤ/3` with `c₁ = −1`,
/// `Q₂ = xy` over `𝔽₂` with `c₂ = [[0,1],[1,1]]` and `v₂ = (0, 1)`.
pub fn matched_72() -> MatchedData {
    MatchedData {
        factors: vec![
            MatchedFactor {
                q: QuadraticFormSpec::new(3, 1, 1, vec![1]).unwrap(),
                f: Matrix::identity(1, 3),
                c: Matrix::square(1, 3, vec![-1]).unwrap(),
            },
            MatchedFactor {
                q: xy_form(),
                f: Matrix::identity(2, 2),
                c: Matrix::square(2, 2, vec![0, 1, 1, 1]).unwrap(),
            },
        ],
        v: vec![0, 1],
    }
}

/// `concrete(2, (3))` with one extra block `(I₂, I₂)` carrying the hyperbolic
/// form: order 96, `rank[c − I | f − I] < n`, hence not simple.
pub fn block_diagonal_data() -> GeneralizedData {
    let p = 2;
    let base = concrete_data(2, &[3]).unwrap().blocks.remove(0);
    let id2 = Matrix::identity(2, p);
    let hyperbolic = Matrix::square(2, p, vec![0, 1, 1, 0]).unwrap();
    GeneralizedData {
        p,
        blocks: vec![GeneralizedBlock {
            l: 3,
            b: base.b.direct_sum(&hyperbolic),
            c: base.c.direct_sum(&id2),
            f: base.f.direct_sum(&id2),
            gamma: 2,
        }],
    }
}

/// Data `(T, S, b, α)` of an asymmetric product.
pub struct ProductData {
    pub name: &'static str,
    pub t: FiniteBrace,
    pub s: FiniteBrace,
    pub b: SymmetricCocycle,
    pub alpha: BraceAction,
}

impl ProductData {
    pub fn build(&self) -> FiniteBrace {
        asymmetric_product(&self.t, &self.s, &self.b, &self.alpha, &limits()).unwrap()
    }
}

/// Which representation `ρ: (S, ·) → GL₂(𝔽₂)` drives an image-criterion instance.
#[derive(Clone, Copy, Debug)]
pub enum Rho {
    /// `ρ(a, μ) = C^a F^μ`: irreducible, images span `T`.
    Irreducible,
    /// `ρ(a, μ) = F^μ`: images span the line `⟨(1, 1)⟩`.
    SwapOnly,
    /// Trivial: images are `{0}`.
    Trivial,
}

/// `T ⋊∘ S` with `T = 𝔽₂²` trivial, `S = concrete(2, (3))` (simple, order
/// 24), `b(x, y) = (x₁y₂ + x₂y₁)·z` for the `λ`-fixed element `z = 1` of
/// additive order 2, and `α_s = ρ(s)` factoring through `(S, ·) → S₃`.
pub fn image_criterion_instance(rho: Rho) -> ProductData {
    let s = build_concrete(2, &[3], &limits()).unwrap();
    let z = 1;
    assert!((0..s.order()).all(|x| s.lambda(x, z) == z) && s.add(z, z) == 0);
    let t = trivial(&[2, 2]);
    let c = Matrix::square(2, 2, vec![0, 1, 1, 1]).unwrap();
    let f = Matrix::square(2, 2, vec![0, 1, 1, 0]).unwrap();
    let id = Matrix::identity(2, 2);
    let matrix_of = |x: usize| {
        let (mu, a) = (x % 2, (x / 2) % 3);
        match rho {
            Rho::Irreducible => c.pow(a as u64).mul(&f.pow(mu as u64)),
            Rho::SwapOnly => f.pow(mu as u64),
            Rho::Trivial => id.clone(),
        }
    };
    let alpha = BraceAction::from_fn(s.order(), 4, |x, v| {
        let image = matrix_of(x).apply(&[(v & 1) as u64, (v >> 1) as u64]);
        (image[0] + 2 * image[1]) as usize
    })
    .unwrap();
    let b = SymmetricCocycle::from_fn(4, s.order(), true, |x, y| {
        let (x1, x2, y1, y2) = (x & 1, x >> 1, y & 1, y >> 1);
        if (x1 * y2 + x2 * y1) % 2 == 1 {
            z
        } else {
            0
        }
    })
    .unwrap();
    let name = match rho {
        Rho::Irreducible => "image_criterion_irreducible",
        Rho::SwapOnly => "image_criterion_swap",
        Rho::Trivial => "image_criterion_trivial",
    };
    ProductData { name, t, s, b, alpha }
}

/// `H' = (𝔽₂², trivial) ⋊∘ ℤ/2` with cocycle `−b` for `Q = xy` and `α = id`.
pub fn h_prime_data() -> ProductData {
    let t = trivial(&[2, 2]);
    let s = trivial(&[2]);
    let b = SymmetricCocycle::from_fn(4, 2, true, |x, y| ((x & 1) * (y >> 1) + (x >> 1) * (y & 1)) % 2).unwrap();
    ProductData { name: "h_prime_data", t, s, b, alpha: BraceAction::trivial(2, 4) }
}

/// `B₃` as `K ⋊ ℤ/3`.
pub fn b3_data() -> ProductData {
    ProductData {
        name: "b3_data",
        t: trivial(&[2, 2]),
        s: trivial(&[3]),
        b: SymmetricCocycle::zero(4, 3),
        alpha: brace_core::families::b3_action(),
    }
}

/// `𝔽₂² ⋊ B₃` with `B₃` acting through its quotient `ℤ/3` by `C = [[0,1],[1,1]]`.
pub fn b3_acting_data() -> ProductData {
    let s = build_b3(&limits()).unwrap();
    let c = Matrix::square(2, 2, vec![0, 1, 1, 1]).unwrap();
    // B₃ index (y + 2z)·3 + x: the ℤ/3 coordinate is x = index % 3, and
    // (B₃, ·) → ℤ/3 is a homomorphism.
    let alpha = BraceAction::from_fn(12, 4, |x, v| {
        let image = c.pow((x % 3) as u64).apply(&[(v & 1) as u64, (v >> 1) as u64]);
        (image[0] + 2 * image[1]) as usize
    })
    .unwrap();
    ProductData { name: "b3_acting", t: trivial(&[2, 2]), s, b: SymmetricCocycle::zero(4, 12), alpha }
}

/// Every product instance whose data is kept.
pub fn product_corpus() -> Vec<ProductData> {
    vec![
        image_criterion_instance(Rho::Irreducible),
        image_criterion_instance(Rho::SwapOnly),
        image_criterion_instance(Rho::Trivial),
        h_prime_data(),
        b3_data(),
        b3_acting_data(),
    ]
}

/// Named braces of orders 2 to 288.
pub fn corpus() -> Vec<(String, FiniteBrace)> {
    let l = limits();
    let mut out: Vec<(String, FiniteBrace)> = Vec::new();
    let mut push = |name: &str, b: FiniteBrace| out.push((name.to_string(), b));
    push("trivial_2", trivial(&[2]));
    push("trivial_3", trivial(&[3]));
    push("trivial_4", trivial(&[4]));
    push("trivial_2x2", trivial(&[2, 2]));
    push("trivial_6", trivial(&[6]));
    push("b3", build_b3(&l).unwrap());
    let b24 = build_wreath_simple(3, 2, &l).unwrap();
    push("perfect_not_simple_72", build_perfect_not_simple(&b24, &l).unwrap());
    push("wreath_simple_3_2", b24);
    push("concrete_2_3", build_concrete(2, &[3], &l).unwrap());
    push("block_diagonal_96", build_generalized(&block_diagonal_data(), &l).unwrap().brace);
    push("h_xy", build_h(&xy_form(), &Matrix::identity(2, 2), &l).unwrap());
    push("h_prime_xy", build_h_prime_and_phi(&xy_form(), &Matrix::identity(2, 2), &l).unwrap().0);
    let matched = build_matched_and_phi_prime(&matched_72(), &l).unwrap();
    push("matched_72", matched.matched);
    push("matched_product_72", matched.product);
    let f2 = trivial(&[2]);
    let z3 = trivial(&[3]);
    let g2 = wreath_product(&f2, &z3, &l).unwrap();
    push("g2_bar_12", quotient(&g2, &constants_ideal(2, 3), &l).unwrap().brace);
    push("wreath_f2_z3", g2);
    push("b3_x_z2", brace_core::brace::direct_product(&build_b3(&l).unwrap(), &f2, &l).unwrap());
    for data in product_corpus() {
        push(data.name, data.build());
    }
    push("concrete_2_3_3", build_concrete(2, &[3, 3], &l).unwrap());
    out
}

/// Candidate `(H, N)` pairs for the second isomorphism theorem: `H` ranges
/// over series terms, the socle and principal ideals (all sub-braces), `N`
/// over the ideals among them.
pub fn second_iso_pairs(b: &FiniteBrace, max_pairs: usize) -> Vec<(Subset, Subset)> {
    let mut candidates: Vec<Subset> = Vec::new();
    candidates.extend(left_series(b));
    candidates.extend(right_series(b));
    candidates.push(socle(b));
    let step = (b.order() / 6).max(1);
    candidates.extend((1..b.order()).step_by(step).map(|x| principal_ideal(b, x)));
    candidates.sort_by_key(|s| (s.len(), s.to_vec()));
    candidates.dedup();
    let hs: Vec<&Subset> = candidates.iter().filter(|s| is_subbrace(b, s)).collect();
    let ns: Vec<&Subset> = candidates.iter().filter(|s| is_ideal(b, s)).collect();
    let mut pairs = Vec::new();
    for h in &hs {
        for n in &ns {
            if pairs.len() < max_pairs {
                pairs.push(((*h).clone(), (*n).clone()));
            }
        }
    }
    pairs
}
