use proptest::prelude::*;
use verlinde::labels::{LabelConvention, LabelTable};
use verlinde::suites::{datum, symmetry_orbit};
use verlinde::weights::parse_weight;
use verlinde::SharedCache;
use verlinde_core::charmod::dominant_character_cached;
use verlinde_core::principal::{cross_checked_image, principal_strings};
use verlinde_core::rootsys::{CartanType, RootDatum, Weight};

fn groups() -> impl Strategy<Value = RootDatum> {
    prop_oneof![
        (1usize..=5).prop_map(|r| datum(CartanType::A, r).unwrap()),
        (2usize..=5).prop_map(|r| datum(CartanType::B, r).unwrap()),
        (2usize..=5).prop_map(|r| datum(CartanType::C, r).unwrap()),
        (4usize..=6).prop_map(|r| datum(CartanType::D, r).unwrap()),
        Just(datum(CartanType::E6, 6).unwrap()),
        Just(datum(CartanType::E7, 7).unwrap()),
        Just(datum(CartanType::E8, 8).unwrap()),
        Just(datum(CartanType::F4, 4).unwrap()),
        Just(datum(CartanType::G2, 2).unwrap()),
    ]
}

fn group_and_weight() -> impl Strategy<Value = (RootDatum, Weight)> {
    groups().prop_flat_map(|d| {
        let r = d.rank();
        (Just(d), proptest::collection::vec(0i64..4, r).prop_map(Weight::new))
    })
}

proptest! {
    #[test]
    fn paper_labels_round_trip((d, w) in group_and_weight()) {
        let table = LabelTable::builtin();
        let paper = table.weight_to_paper(&d, &w).unwrap();
        prop_assert_eq!(table.weight_from_paper(&d, &paper).unwrap(), w);
    }

    #[test]
    fn displayed_weights_parse_back((d, w) in group_and_weight()) {
        let text = w.to_string();
        prop_assert_eq!(parse_weight(&d, &text, LabelConvention::Bourbaki).unwrap(), w.clone());
        let bracketed = format!("{:?}", w.coords()).replace(' ', "");
        prop_assert_eq!(parse_weight(&d, &bracketed, LabelConvention::Bourbaki).unwrap(), w);
    }

    /// Alcove symmetries map the fundamental alcove to itself.
    #[test]
    fn symmetry_orbits_stay_in_the_alcove(d in groups(), extra in 1u64..12, pick in 0usize..64) {
        let h = d.coxeter_number();
        let Some(p) = (h + extra..h + 40).find(|&p| verlinde_core::is_prime(p)) else { return Ok(()) };
        let alcove = d.alcove_weights(p).unwrap();
        prop_assume!(alcove.len() < 5000);
        let lambda = &alcove[pick % alcove.len()];
        for mu in symmetry_orbit(&d, lambda, p).unwrap() {
            prop_assert!(d.in_alcove(&mu, p), "{} left the alcove", mu);
        }
    }

    #[test]
    fn shared_cache_returns_the_stored_character((d, w) in group_and_weight()) {
        prop_assume!(d.rank() <= 4 && w.coords().iter().sum::<i64>() <= 6);
        let cache = SharedCache::new();
        let first = dominant_character_cached(&d, &w, &cache).unwrap();
        let second = dominant_character_cached(&d, &w, &cache).unwrap();
        prop_assert!(std::sync::Arc::ptr_eq(&first, &second));
        prop_assert_eq!(cache.len(), 1);
    }
}

#[test]
fn cached_and_uncached_images_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("characters.bin");
    let cache = SharedCache::new();
    let g2 = datum(CartanType::G2, 2).unwrap();
    let first = principal_strings(&g2, g2.highest_long_root(), &cache).unwrap();
    cache.save(&path).unwrap();
    let reloaded = SharedCache::load(&path).unwrap();
    assert_eq!(reloaded.len(), cache.len());
    let second = principal_strings(&g2, g2.highest_long_root(), &reloaded).unwrap();
    assert_eq!(first, second);
    assert_eq!(cross_checked_image(&first, 13).unwrap().to_string(), "L_2 ⊕ L_10");
}
