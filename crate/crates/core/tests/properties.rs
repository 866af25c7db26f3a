use num_bigint::BigUint;
use proptest::prelude::*;
use verlinde_core::charmod::{dominant_character, weyl_dimension};
use verlinde_core::dims::{divisibility_check, lucas_binomial, p_adic_divisible, PowerRows};
use verlinde_core::is_prime;
use verlinde_core::liealg::{bracket_nonzero, BracketSupport};
use verlinde_core::principal::{cyclotomic_image, restrict_principal, verp_image, weyl_strings, SL2Char, WeylString};
use verlinde_core::rootsys::{CartanType, RootDatum, Weight};
use verlinde_core::verlinde_g::dual_weight;
use verlinde_core::verp::{fuse, VerpObject};

fn all_groups() -> Vec<RootDatum> {
    let mut out = Vec::new();
    for r in 1..=8 {
        out.push(RootDatum::new(CartanType::A, r).unwrap());
    }
    for r in 2..=8 {
        out.push(RootDatum::new(CartanType::B, r).unwrap());
        out.push(RootDatum::new(CartanType::C, r).unwrap());
    }
    for r in 4..=8 {
        out.push(RootDatum::new(CartanType::D, r).unwrap());
    }
    for (ty, r) in [(CartanType::E6, 6), (CartanType::E7, 7), (CartanType::E8, 8), (CartanType::F4, 4), (CartanType::G2, 2)] {
        out.push(RootDatum::new(ty, r).unwrap());
    }
    out
}

fn small_groups() -> impl Strategy<Value = RootDatum> {
    prop_oneof![
        (1usize..=4).prop_map(|r| RootDatum::new(CartanType::A, r).unwrap()),
        (2usize..=4).prop_map(|r| RootDatum::new(CartanType::B, r).unwrap()),
        (2usize..=4).prop_map(|r| RootDatum::new(CartanType::C, r).unwrap()),
        Just(RootDatum::new(CartanType::D, 4).unwrap()),
        Just(RootDatum::new(CartanType::F4, 4).unwrap()),
        Just(RootDatum::new(CartanType::G2, 2).unwrap()),
    ]
}

fn group_and_weight(max_coord: i64) -> impl Strategy<Value = (RootDatum, Weight)> {
    small_groups().prop_flat_map(move |d| {
        let r = d.rank();
        (Just(d), proptest::collection::vec(0..=max_coord, r).prop_map(Weight::new))
    })
}

#[test]
fn rho_pairs_with_short_coroot_to_h_minus_one() {
    for d in all_groups() {
        assert_eq!(d.pair_theta_s(d.rho()) as u64, d.coxeter_number() - 1, "{}", d.name());
    }
}

proptest! {
    /// Freudenthal multiplicities summed over Weyl orbits give the Weyl
    /// dimension formula.
    #[test]
    fn character_dimension_matches_weyl_formula((d, w) in group_and_weight(2)) {
        let chi = dominant_character(&d, &w).unwrap();
        let total: u64 = chi.entries().iter().map(|(mu, &m)| m * d.orbit(mu).len() as u64).sum();
        prop_assert_eq!(BigUint::from(total), weyl_dimension(&d, &w));
    }

    #[test]
    fn principal_restriction_is_symmetric_and_decomposes((d, w) in group_and_weight(2)) {
        let chi = restrict_principal(&d, &dominant_character(&d, &w).unwrap());
        prop_assert!(chi.is_symmetric());
        let strings = weyl_strings(&chi).unwrap();
        prop_assert_eq!(SL2Char::from_strings(&strings), chi);
    }

    #[test]
    fn weyl_strings_round_trip(indices in proptest::collection::vec(0u64..40, 0..12)) {
        let strings = WeylString::from_indices(&indices);
        prop_assert_eq!(weyl_strings(&SL2Char::from_strings(&strings)).unwrap(), strings);
    }

    /// Pair cancellation and cyclotomic evaluation agree on alcove simples.
    #[test]
    fn image_routes_agree((d, w) in group_and_weight(3), extra in 1u64..30) {
        let h = d.coxeter_number();
        let p = (h + extra..).find(|&p| is_prime(p)).unwrap();
        prop_assume!(d.in_alcove(&w, p));
        let chi = restrict_principal(&d, &dominant_character(&d, &w).unwrap());
        prop_assert_eq!(verp_image(&weyl_strings(&chi).unwrap(), p).unwrap(), cyclotomic_image(&chi, p).unwrap());
    }

    #[test]
    fn alcove_grows_with_p((d, w) in group_and_weight(4), extra in 0u64..20) {
        let p = (d.coxeter_number() + 1 + extra..).find(|&p| is_prime(p)).unwrap();
        let q = (p + 1..).find(|&q| is_prime(q)).unwrap();
        if d.in_alcove(&w, p) {
            prop_assert!(d.in_alcove(&w, q));
        }
    }

    #[test]
    fn duality_is_an_involution_preserving_dimension((d, w) in group_and_weight(3)) {
        let dual = dual_weight(&d, &w);
        prop_assert_eq!(dual_weight(&d, &dual), w.clone());
        prop_assert_eq!(weyl_dimension(&d, &dual), weyl_dimension(&d, &w));
    }

    #[test]
    fn fusion_is_commutative_and_associative(pi in 0usize..8, a in 0u64..40, b in 0u64..40, c in 0u64..40) {
        let p = [5u64, 7, 11, 13, 17, 19, 23, 29][pi];
        let (a, b, c) = (a % (p - 1), b % (p - 1), c % (p - 1));
        prop_assert_eq!(fuse(a, b, p).unwrap(), fuse(b, a, p).unwrap());
        let (la, lb, lc) = (VerpObject::simple(a, p).unwrap(), VerpObject::simple(b, p).unwrap(), VerpObject::simple(c, p).unwrap());
        let left = la.tensor(&lb).unwrap().tensor(&lc).unwrap();
        let right = la.tensor(&lb.tensor(&lc).unwrap()).unwrap();
        prop_assert_eq!(left.dim_mod_p(), (a + 1) * (b + 1) % p * (c + 1) % p);
        prop_assert_eq!(left, right);
    }

    /// The bracket `L_2i ⊗ L_2j → L_2k` is nonzero for all orderings of
    /// `(i, j, k)` or for none, since the invariant form is symmetric.
    #[test]
    fn bracket_support_is_permutation_invariant(pi in 0usize..6, n in 2u64..20, i in 1u64..20, j in 1u64..20, k in 1u64..20) {
        let p = [11u64, 13, 17, 19, 23, 29][pi];
        let n = 2 + n % ((p - 1) / 2 - 1);
        let (i, j, k) = (1 + i % (n - 1), 1 + j % (n - 1), 1 + k % (n - 1));
        let support = BracketSupport::new(n, p).unwrap();
        let base = support.contains(i, j, k);
        for (a, b, c) in [(i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
            prop_assert_eq!(support.contains(a, b, c), base);
        }
        prop_assert_eq!(bracket_nonzero(n, i, j, k, p).unwrap(), base);
    }

    #[test]
    fn divisibility_is_p_adic(pi in 0usize..4, m in 0u64..600, n in 0u64..600, r in 0u32..3) {
        let p = [2u64, 3, 5, 7][pi];
        prop_assert_eq!(divisibility_check(m, n, p, r).unwrap(), p_adic_divisible(m, n, p, r));
    }

    #[test]
    fn lucas_matches_pascal_rows(pi in 0usize..4, nn in 0u64..300, d in 0u64..300) {
        let p = [2u64, 3, 5, 7][pi];
        let mut rows = PowerRows::new(p, d as usize).unwrap();
        for _ in 0..nn {
            rows.advance();
        }
        prop_assert_eq!(rows.row()[d as usize], lucas_binomial(nn, d, p));
    }
}
