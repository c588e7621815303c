mod common;

use ckikit::cli::codec::{decode_digraph6, encode_digraph6};
use ckikit::enumeration::{count_classes, enumerate_classes, EnumClass, FilterSpec};
use ckikit::recognizers::{canonical_form, Predicate};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

#[test]
fn class_counts_match_orbit_oracle() {
    let cases = [
        (EnumClass::All, Kind::All, 5),
        (EnumClass::Oriented, Kind::Oriented, 6),
        (EnumClass::Semicomplete, Kind::Semicomplete, 5),
    ];
    for (cls, kind, max_n) in cases {
        for n in 1..=max_n {
            let lib = count_classes(n, cls, &FilterSpec::none()).unwrap();
            assert_eq!(lib, orbit_count(n, kind), "{cls} n={n}");
        }
    }
}

#[test]
fn frozen_small_counts() {
    let all: Vec<usize> = (0..=5)
        .map(|n| count_classes(n, EnumClass::All, &FilterSpec::none()).unwrap())
        .collect();
    assert_eq!(all, [1, 1, 3, 16, 218, 9608]);
    let semi: Vec<usize> = (1..=5)
        .map(|n| count_classes(n, EnumClass::Semicomplete, &FilterSpec::none()).unwrap())
        .collect();
    assert_eq!(semi, [1, 2, 7, 42, 582]);
}

#[test]
fn representatives_are_pairwise_non_isomorphic_and_in_class() {
    for n in 1..=4 {
        let ds: Vec<_> = enumerate_classes(n, EnumClass::All, &FilterSpec::none()).unwrap().collect();
        for (i, a) in ds.iter().enumerate() {
            for b in &ds[i + 1..] {
                assert!(!perm_isomorphic(&matrix(a), &matrix(b)));
            }
        }
        for d in enumerate_classes(n, EnumClass::Oriented, &FilterSpec::none()).unwrap() {
            assert!(d.is_asymmetric());
        }
    }
}

#[test]
fn filtered_enumeration_matches_post_filtering() {
    let filter = FilterSpec::parse("k-quasi-transitive:3,strong").unwrap();
    let p3: Predicate = "k-quasi-transitive:3".parse().unwrap();
    for n in 1..=5 {
        let via_filter: Vec<_> = enumerate_classes(n, EnumClass::All, &filter).unwrap().collect();
        let post: Vec<_> = enumerate_classes(n, EnumClass::All, &FilterSpec::none())
            .unwrap()
            .filter(|d| p3.eval(d) && brute_strong(&matrix(d)))
            .collect();
        assert_eq!(via_filter, post, "n={n}");
    }
}

#[test]
fn codec_round_trips_seeded_random_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..10_000 {
        let n = i % 21;
        let m = random_matrix(&mut rng, n, 0.4);
        let d = from_matrix(&m);
        let text = encode_digraph6(&d).unwrap();
        assert_eq!(text, reference_digraph6(&m));
        assert_eq!(decode_digraph6(&text).unwrap(), d);
    }
}

#[test]
fn canonical_representative_is_a_fixed_point() {
    for d in enumerate_classes(5, EnumClass::Oriented, &FilterSpec::none()).unwrap() {
        let f = canonical_form(&d).unwrap();
        assert_eq!(f.to_digraph(), d);
    }
}
