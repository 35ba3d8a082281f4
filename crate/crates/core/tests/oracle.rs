mod common;

use bkl4::classical::{bkl_to_artin, classical_is_trivial, classical_normalize, ArtinLetter};
use bkl4::simple::DualSimple::*;
use bkl4::BraidWord;

#[test]
fn triviality_agrees_with_the_dual_engine() {
    let mut rng = common::rng(31);
    let mut trivial = 0;
    for i in 0..2000 {
        let w1 = common::random_word(&mut rng, 20);
        // half the pairs are equal braids written differently
        let w2 = if i % 2 == 0 {
            common::rewrite(&mut rng, &w1, 10)
        } else {
            common::random_word(&mut rng, 20)
        };
        let mut q = w1.clone();
        q.append(&w2.inverse());
        let dual = q.normalize().is_identity();
        assert_eq!(dual, classical_is_trivial(&bkl_to_artin(&q)), "{q:?}");
        trivial += dual as usize;
    }
    assert!(trivial >= 1000);
}

#[test]
fn delta_has_length_three_in_the_dual_structure() {
    let mut w = BraidWord::new();
    for s in [A12, A23, A34, A12, A23, A12] {
        w.push_simple(s, 1);
    }
    let x = w.normalize();
    assert_eq!(x.word_length(), 3);
    let sigmas: Vec<ArtinLetter> = [1, 2, 3, 1, 2, 1].iter().map(|&i| ArtinLetter::new(i, false)).collect();
    assert_eq!(classical_normalize(&sigmas).word_length(), 1);
    // so the dual length can reach three times the classical one
    assert!(x.word_length() > 2 * classical_normalize(&sigmas).word_length());
}

#[test]
fn lengths_are_within_a_factor_of_three() {
    let mut rng = common::rng(32);
    for _ in 0..3000 {
        let w = common::random_word(&mut rng, 30);
        let dual = w.normalize().word_length();
        let cl = classical_normalize(&bkl_to_artin(&w)).word_length();
        assert!(dual <= 3 * cl, "{dual} vs {cl}");
        assert!(cl <= 3 * dual, "{dual} vs {cl}");
    }
}
