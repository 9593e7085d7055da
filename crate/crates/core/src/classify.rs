//! Classification of Aut(HTG(m, n, l)) from parameter arithmetic alone.
//!
//! Four arithmetic conditions decide which permutations of the three edge
//! colors extend to group automorphisms fixing the connection set:
//!
//! * (c1) swap blue/green:  gcd(n, l+m) = 2m  and  2mn | l^2 + 2ml - 3m^2
//! * (c2) swap red/green:   gcd(n, l-m) = 2m  and  2mn | l^2 - 2ml - 3m^2
//! * (c3) swap red/blue:    l = 0 or l = n/2
//! * (c4) 3-cycle:          both gcds = 2m    and  2mn | l^2 + 3m^2
//!
//! Outside the exceptional list every automorphism is color permuting, so
//! the full group is the left regular representation extended by the color
//! subgroup, and the vertex stabilizer order is just the subgroup order
//! (1, 2, 3 or 6). Exceptional triples are recognized first and carry their
//! own known data. `classify` never builds a graph; the graph engine enters
//! only through verification.

use crate::aut::Perm;
use crate::construct::{gcd, EdgeColor, HtgParams};
use crate::group::{GroupElement, GroupSpec};
use crate::named::{recognize_exceptional, ExceptionalId};
use num_bigint::BigUint;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    C1,
    C2,
    C3,
    C4,
}

/// Truth values of the four conditions for one triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionFlags {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
}

impl ConditionFlags {
    pub fn count(&self) -> u32 {
        u32::from(self.c1) + u32::from(self.c2) + u32::from(self.c3) + u32::from(self.c4)
    }

    /// Two of the conditions holding forces all four (they generate the
    /// color group, which is closed under composition).
    pub fn is_consistent(&self) -> bool {
        self.count() < 2 || self.count() == 4
    }
}

/// Evaluates one condition. Valid for any parameter triple as given; the
/// gcd over `l - m` is taken on the residue mod n, matching the element
/// order formulas.
pub fn condition(p: &HtgParams, which: Condition) -> bool {
    let (m, n, ell) = (p.m() as i64, p.n() as i64, p.ell() as i64);
    let two_mn = 2 * m * n;
    let gcd_plus = gcd(n as u64, ((ell + m) % n) as u64) as i64;
    let gcd_minus = gcd(n as u64, (ell - m).rem_euclid(n) as u64) as i64;
    match which {
        Condition::C1 => gcd_plus == 2 * m && (ell * ell + 2 * m * ell - 3 * m * m) % two_mn == 0,
        Condition::C2 => gcd_minus == 2 * m && (ell * ell - 2 * m * ell - 3 * m * m) % two_mn == 0,
        Condition::C3 => ell == 0 || 2 * ell == n,
        Condition::C4 => {
            gcd_plus == 2 * m && gcd_minus == 2 * m && (ell * ell + 3 * m * m) % two_mn == 0
        }
    }
}

pub fn condition_flags(p: &HtgParams) -> ConditionFlags {
    ConditionFlags {
        c1: condition(p, Condition::C1),
        c2: condition(p, Condition::C2),
        c3: condition(p, Condition::C3),
        c4: condition(p, Condition::C4),
    }
}

/// The subgroup of S3 realized by color-permuting automorphisms fixing the
/// identity vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorGroup {
    Trivial,
    /// {id, swap blue/green} — c1 only
    SwapFixRed,
    /// {id, swap red/green} — c2 only
    SwapFixBlue,
    /// {id, swap red/blue} — c3 only
    SwapFixGreen,
    /// the rotations — c4 only
    Cyclic3,
    Sym3,
}

impl ColorGroup {
    pub fn order(&self) -> u32 {
        match self {
            ColorGroup::Trivial => 1,
            ColorGroup::SwapFixRed | ColorGroup::SwapFixBlue | ColorGroup::SwapFixGreen => 2,
            ColorGroup::Cyclic3 => 3,
            ColorGroup::Sym3 => 6,
        }
    }
}

pub fn color_aut_subgroup(p: &HtgParams) -> ColorGroup {
    let flags = condition_flags(p);
    match (flags.c1, flags.c2, flags.c3, flags.c4) {
        (false, false, false, false) => ColorGroup::Trivial,
        (true, false, false, false) => ColorGroup::SwapFixRed,
        (false, true, false, false) => ColorGroup::SwapFixBlue,
        (false, false, true, false) => ColorGroup::SwapFixGreen,
        (false, false, false, true) => ColorGroup::Cyclic3,
        _ => {
            // Any two flags generate the whole symmetric group; the
            // arithmetic then forces all four to hold.
            debug_assert!(flags.count() == 4, "inconsistent flags {flags:?} for {p}");
            ColorGroup::Sym3
        }
    }
}

/// A permutation of the three edge colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorPerm {
    Identity,
    SwapBlueGreen,
    SwapRedGreen,
    SwapRedBlue,
    /// red -> blue -> green -> red
    RotateForward,
    /// red -> green -> blue -> red
    RotateBackward,
}

impl ColorPerm {
    pub const ALL: [ColorPerm; 6] = [
        ColorPerm::Identity,
        ColorPerm::SwapBlueGreen,
        ColorPerm::SwapRedGreen,
        ColorPerm::SwapRedBlue,
        ColorPerm::RotateForward,
        ColorPerm::RotateBackward,
    ];

    pub fn apply(&self, color: EdgeColor) -> EdgeColor {
        use EdgeColor::{Blue, Green, Red};
        match (self, color) {
            (ColorPerm::Identity, c) => c,
            (ColorPerm::SwapBlueGreen, Red) => Red,
            (ColorPerm::SwapBlueGreen, Blue) => Green,
            (ColorPerm::SwapBlueGreen, Green) => Blue,
            (ColorPerm::SwapRedGreen, Red) => Green,
            (ColorPerm::SwapRedGreen, Blue) => Blue,
            (ColorPerm::SwapRedGreen, Green) => Red,
            (ColorPerm::SwapRedBlue, Red) => Blue,
            (ColorPerm::SwapRedBlue, Blue) => Red,
            (ColorPerm::SwapRedBlue, Green) => Green,
            (ColorPerm::RotateForward, Red) => Blue,
            (ColorPerm::RotateForward, Blue) => Green,
            (ColorPerm::RotateForward, Green) => Red,
            (ColorPerm::RotateBackward, Red) => Green,
            (ColorPerm::RotateBackward, Blue) => Red,
            (ColorPerm::RotateBackward, Green) => Blue,
        }
    }

    /// The condition under which this color permutation is realized (always
    /// for the identity).
    fn required_condition(&self) -> Option<Condition> {
        match self {
            ColorPerm::Identity => None,
            ColorPerm::SwapBlueGreen => Some(Condition::C1),
            ColorPerm::SwapRedGreen => Some(Condition::C2),
            ColorPerm::SwapRedBlue => Some(Condition::C3),
            ColorPerm::RotateForward | ColorPerm::RotateBackward => Some(Condition::C4),
        }
    }
}

/// The concrete graph automorphism fixing the identity vertex that realizes
/// a color permutation, when the matching condition holds.
///
/// The group automorphism is defined by its images of x, y and t and
/// extended multiplicatively over canonical forms; the result is checked to
/// preserve adjacency and to act on colors as requested before it is
/// returned.
pub fn color_automorphism(p: &HtgParams, sigma: ColorPerm) -> Option<Perm> {
    let spec = GroupSpec::new(*p);
    if let Some(required) = sigma.required_condition() {
        if !condition(p, required) {
            return None;
        }
    }

    let x = spec.generator_x();
    let y = spec.generator_y();
    let t = spec.generator_t();
    let x_inv = spec.inverse(x);
    let y_inv = spec.inverse(y);
    // Images of (x, y, t) realizing each permutation of {t, tx, ty}.
    let (x_img, y_img, t_img) = match sigma {
        ColorPerm::Identity => (x, y, t),
        ColorPerm::SwapBlueGreen => (y, x, t),
        ColorPerm::SwapRedGreen => (spec.multiply(y_inv, x), y_inv, spec.multiply(t, y)),
        ColorPerm::SwapRedBlue => (x_inv, spec.multiply(x_inv, y), spec.multiply(t, x)),
        ColorPerm::RotateForward => (spec.multiply(x_inv, y), x_inv, spec.multiply(t, x)),
        ColorPerm::RotateBackward => (y_inv, spec.multiply(y_inv, x), spec.multiply(t, y)),
    };

    let power = |base: GroupElement, exp: u64| {
        let mut acc = GroupElement::IDENTITY;
        for _ in 0..exp {
            acc = spec.multiply(acc, base);
        }
        acc
    };

    let colored = spec.cayley_colored_graph();
    let images: Vec<usize> = (0..spec.order() as usize)
        .map(|v| {
            let g = colored.element_of(v);
            let mut image = power(x_img, g.x_exp);
            image = spec.multiply(image, power(y_img, g.y_exp));
            if g.flip {
                image = spec.multiply(image, t_img);
            }
            spec.vertex_of(image)
        })
        .collect();
    let perm = Perm::from_images(images).expect("automorphism images form a bijection");

    // Check adjacency and the color action; the arithmetic conditions make
    // this a genuine automorphism, the check enforces it.
    let graph = colored.graph();
    for (u, v) in graph.edges() {
        let (iu, iv) = (perm.apply(u), perm.apply(v));
        assert!(graph.has_edge(iu, iv), "{p}: {sigma:?} breaks edge ({u},{v})");
        let color = colored.color_of(u, v).unwrap();
        assert_eq!(
            colored.color_of(iu, iv),
            Some(sigma.apply(color)),
            "{p}: {sigma:?} mislabels edge ({u},{v})"
        );
    }
    Some(perm)
}

/// The five classification outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Category {
    Exceptional(ExceptionalId),
    TwoArcRegular,
    OneArcRegular,
    StabilizerTwo,
    RegularAut,
}

impl Category {
    pub fn label(&self) -> &'static str {
        match self {
            Category::Exceptional(_) => "exceptional",
            Category::TwoArcRegular => "two-arc-regular",
            Category::OneArcRegular => "one-arc-regular",
            Category::StabilizerTwo => "stabilizer-two",
            Category::RegularAut => "regular",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Category::Exceptional(id) => write!(f, "exceptional ({})", id.kind),
            other => f.write_str(other.label()),
        }
    }
}

/// Everything the classification decides for one triple, from arithmetic
/// alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    /// The triple in normal form.
    pub params: HtgParams,
    pub girth: u32,
    pub category: Category,
    pub flags: ConditionFlags,
    pub predicted_aut_order: BigUint,
    pub predicted_stabilizer: BigUint,
    pub is_normal_cayley: bool,
}

impl ClassificationResult {
    /// Name of the isomorphic named graph, for exceptional triples.
    pub fn named_isomorph(&self) -> Option<String> {
        match &self.category {
            Category::Exceptional(id) => Some(id.kind.to_string()),
            _ => None,
        }
    }
}

/// Classifies a triple: normalize, check the exceptional list, otherwise
/// read the category off the condition flags.
pub fn classify(p: &HtgParams) -> ClassificationResult {
    let normal = p.normal_form();
    let flags = condition_flags(&normal);
    assert!(
        flags.is_consistent(),
        "two conditions hold but not all four for {normal}"
    );
    let girth = normal.girth_by_parameters();
    let order = BigUint::from(normal.order());

    if let Some(exceptional) = recognize_exceptional(&normal).expect("normalized above") {
        let predicted_stabilizer = exceptional.stabilizer_order.clone();
        let predicted_aut_order = exceptional.aut_order();
        debug_assert_eq!(predicted_aut_order, &order * &predicted_stabilizer);
        return ClassificationResult {
            params: normal,
            girth,
            category: Category::Exceptional(exceptional),
            flags,
            predicted_aut_order,
            predicted_stabilizer,
            is_normal_cayley: false,
        };
    }

    let category = match color_aut_subgroup(&normal) {
        ColorGroup::Sym3 => Category::TwoArcRegular,
        ColorGroup::Cyclic3 => Category::OneArcRegular,
        ColorGroup::SwapFixRed | ColorGroup::SwapFixBlue | ColorGroup::SwapFixGreen => {
            Category::StabilizerTwo
        }
        ColorGroup::Trivial => Category::RegularAut,
    };
    let predicted_stabilizer = BigUint::from(color_aut_subgroup(&normal).order());
    ClassificationResult {
        params: normal,
        girth,
        predicted_aut_order: order * &predicted_stabilizer,
        predicted_stabilizer,
        category,
        flags,
        is_normal_cayley: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::ExceptionalKind;

    fn params(m: u32, n: u32, ell: u32) -> HtgParams {
        HtgParams::new(m, n, ell).unwrap()
    }

    #[test]
    fn condition_examples() {
        assert!(condition(&params(1, 10, 3), Condition::C2));
        assert!(condition(&params(2, 6, 0), Condition::C3));
        assert!(condition(&params(1, 26, 7), Condition::C4));
        assert!(!condition(&params(1, 26, 7), Condition::C1));
        assert!(!condition(&params(1, 18, 5), Condition::C1));
        assert!(!condition(&params(1, 18, 5), Condition::C2));
        assert!(!condition(&params(1, 18, 5), Condition::C3));
        assert!(!condition(&params(1, 18, 5), Condition::C4));
    }

    #[test]
    fn color_subgroup_examples() {
        assert_eq!(color_aut_subgroup(&params(4, 8, 4)), ColorGroup::Sym3);
        assert_eq!(color_aut_subgroup(&params(1, 26, 7)), ColorGroup::Cyclic3);
        assert_eq!(color_aut_subgroup(&params(1, 18, 5)), ColorGroup::Trivial);
        assert_eq!(
            color_aut_subgroup(&params(1, 10, 3)),
            ColorGroup::SwapFixBlue
        );
        assert_eq!(
            color_aut_subgroup(&params(1, 10, 5)),
            ColorGroup::SwapFixGreen
        );
    }

    #[test]
    fn color_automorphisms_match_conditions() {
        // (4,8,4) admits all six color permutations.
        for sigma in ColorPerm::ALL {
            assert!(color_automorphism(&params(4, 8, 4), sigma).is_some(), "{sigma:?}");
        }
        // (1,18,5) admits only the identity.
        for sigma in ColorPerm::ALL {
            let expected = sigma == ColorPerm::Identity;
            assert_eq!(
                color_automorphism(&params(1, 18, 5), sigma).is_some(),
                expected,
                "{sigma:?}"
            );
        }
    }

    #[test]
    fn swap_automorphism_fixes_identity_and_squares_to_identity() {
        let p = params(4, 8, 4);
        let perm = color_automorphism(&p, ColorPerm::SwapBlueGreen).unwrap();
        let spec = GroupSpec::new(p);
        let identity_vertex = spec.vertex_of(GroupElement::IDENTITY);
        assert_eq!(perm.apply(identity_vertex), identity_vertex);
        assert!(perm.then(&perm).is_identity());
        // t is fixed, tx and ty swap.
        let [t, tx, ty] = spec.reflections();
        assert_eq!(perm.apply(spec.vertex_of(t)), spec.vertex_of(t));
        assert_eq!(perm.apply(spec.vertex_of(tx)), spec.vertex_of(ty));
    }

    #[test]
    fn rotation_automorphism_has_order_three() {
        let p = params(1, 26, 7);
        let rot = color_automorphism(&p, ColorPerm::RotateForward).unwrap();
        assert!(!rot.is_identity());
        let rot3 = rot.then(&rot).then(&rot);
        assert!(rot3.is_identity());
    }

    #[test]
    fn classify_exceptional_examples() {
        let result = classify(&params(1, 14, 5));
        assert!(matches!(
            &result.category,
            Category::Exceptional(id) if id.kind == ExceptionalKind::Heawood
        ));
        assert_eq!(result.predicted_aut_order, BigUint::from(336u16));
        assert!(!result.is_normal_cayley);
        assert_eq!(result.girth, 6);
        assert_eq!(result.named_isomorph().as_deref(), Some("Heawood"));
    }

    #[test]
    fn classify_flag_categories() {
        let two_arc = classify(&params(2, 12, 6));
        assert_eq!(two_arc.category, Category::TwoArcRegular);
        assert_eq!(two_arc.predicted_aut_order, BigUint::from(144u16));

        let one_arc = classify(&params(1, 26, 7));
        assert_eq!(one_arc.category, Category::OneArcRegular);
        assert_eq!(one_arc.predicted_aut_order, BigUint::from(78u8));

        let regular = classify(&params(1, 18, 5));
        assert_eq!(regular.category, Category::RegularAut);
        assert_eq!(regular.predicted_aut_order, BigUint::from(18u8));

        let stab_two = classify(&params(2, 8, 0));
        assert_eq!(stab_two.category, Category::StabilizerTwo);
        assert_eq!(stab_two.predicted_aut_order, BigUint::from(32u8));
    }

    #[test]
    fn classify_normalizes_first() {
        let raw = params(1, 16, 11);
        let result = classify(&raw);
        assert_eq!(result.params, params(1, 16, 5));
        assert!(matches!(
            &result.category,
            Category::Exceptional(id) if id.kind == ExceptionalKind::MoebiusKantor
        ));
    }

    #[test]
    fn exceptional_triples_may_satisfy_conditions_without_being_classified_by_them() {
        // (1,16,5) satisfies (c1) but is Moebius-Kantor, not stabilizer-two.
        let p = params(1, 16, 5);
        assert!(condition(&p, Condition::C1));
        let result = classify(&p);
        assert!(matches!(result.category, Category::Exceptional(_)));
    }
}
