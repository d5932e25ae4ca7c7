mod common;

use common::*;
use proptest::prelude::*;
use repwords_core::{
    avoids_factors, fixed_point_prefix, is_cubefree, is_overlapfree, is_squarefree,
    mapped_stream_prefix, max_square_root, FactorSet, Morphism, Word, WordStream,
};

fn quaternary(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..4, 0..max_len)
}

proptest! {
    #[test]
    fn apply_is_a_homomorphism(u in quaternary(20), v in quaternary(20)) {
        for m in [Morphism::quaternary_squarefree(), Morphism::binary_coding()] {
            let uv: Vec<u8> = u.iter().chain(&v).copied().collect();
            let joined = m.apply(&u).unwrap().concat(&m.apply(&v).unwrap());
            prop_assert_eq!(m.apply(&uv).unwrap(), joined);
        }
    }

    #[test]
    fn images_are_uniform(w in quaternary(40)) {
        prop_assert_eq!(Morphism::quaternary_squarefree().apply(&w).unwrap().len(), 10 * w.len());
        prop_assert_eq!(Morphism::binary_coding().apply(&w).unwrap().len(), 6 * w.len());
    }

    #[test]
    fn fixed_point_prefixes_are_stable(n in 0usize..400) {
        for (m, a) in [(Morphism::quaternary_squarefree(), 0), (Morphism::thue_morse(), 0), (Morphism::thue_morse(), 1)] {
            let short = fixed_point_prefix(&m, a, n).unwrap();
            let long = fixed_point_prefix(&m, a, n + 1).unwrap();
            prop_assert!(long.starts_with(&short));
            prop_assert!(m.apply(&short).unwrap().starts_with(&short));
        }
    }

    #[test]
    fn streaming_in_chunks_matches_one_call(chunks in prop::collection::vec(0usize..50, 0..10)) {
        let h = Morphism::quaternary_squarefree();
        let g = Morphism::binary_coding();
        let total: usize = chunks.iter().sum();
        let mut stream = WordStream::mapped(&g, &h, 0).unwrap();
        let mut joined = Vec::new();
        for n in &chunks {
            joined.extend_from_slice(&stream.take_word(*n));
        }
        let expected = mapped_stream_prefix(&g, &h, 0, total).unwrap();
        prop_assert_eq!(&joined[..], expected.letters());
    }

    #[test]
    fn text_round_trip(w in quaternary(30)) {
        let word = Word::new(w, 4).unwrap();
        prop_assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
    }
}

#[test]
fn thue_morse_matches_parity_definition() {
    let mu = Morphism::thue_morse();
    assert_eq!(fixed_point_prefix(&mu, 0, 4096).unwrap().letters(), &thue_morse_by_parity(4096)[..]);
}

#[test]
fn quaternary_fixed_point_long_prefix() {
    let h = Morphism::quaternary_squarefree();
    let w = fixed_point_prefix(&h, 0, 10_000).unwrap();
    assert!(is_squarefree(&w));
    assert!(avoids_factors(&w, &FactorSet::forbidden_factors()));
}

#[test]
fn coded_word_long_prefix() {
    let h = Morphism::quaternary_squarefree();
    let g = Morphism::binary_coding();
    let w = mapped_stream_prefix(&g, &h, 0, 1000).unwrap();
    assert!(is_cubefree(&w));
    assert!(repwords_core::find_squares(&w, 4, None).is_empty());
    assert_eq!(max_square_root(&w), 3);
}

#[test]
fn thue_morse_is_overlap_free() {
    let mu = Morphism::thue_morse();
    assert!(is_overlapfree(&fixed_point_prefix(&mu, 0, 8192).unwrap()));
}
