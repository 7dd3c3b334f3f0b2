mod common;

use std::sync::OnceLock;

use common::{bfs_canonical, to_hnn_word, Sym, ALPHABET};
use hnnlin::exact::{Exponent, QMatrix};
use hnnlin::linearize::{
    build_pi_q, canonicalize, certify_batch, certify_nontrivial, check_ledger, schottky_q5, LinearizeError, PiQ, RepSpec, Verdict,
};
use hnnlin::words::{CyclicOracle, GammaElement, HnnWord, Letter};
use proptest::prelude::*;

const FIXTURE: &str = include_str!("../fixtures/schottky-q5.json");

fn pi() -> &'static PiQ {
    static PI: OnceLock<PiQ> = OnceLock::new();
    PI.get_or_init(|| build_pi_q(&schottky_q5()).unwrap())
}

fn sym_word(max: usize) -> impl Strategy<Value = Vec<Sym>> {
    prop::collection::vec(prop::sample::select(ALPHABET.to_vec()), 0..=max)
}

fn off_w_element() -> impl Strategy<Value = GammaElement> {
    prop::collection::vec((0usize..2, prop::sample::select(vec![-2i64, -1, 1, 2])), 1..4)
        .prop_map(|ls| GammaElement::from_letters(ls.into_iter().map(|(g, e)| Letter(g, e))))
        .prop_filter("outside <w>", |g| pi().oracle().power_of_w(g).is_none())
}

fn canonical_word() -> impl Strategy<Value = HnnWord> {
    prop::collection::vec((prop::sample::select(vec![-2i64, -1, 1, 2]), off_w_element()), 1..4).prop_map(|mut syl| {
        if syl.iter().any(|s| s.0 > 0) {
            let start = syl.iter().position(|s| s.0 > 0).unwrap();
            syl.rotate_left(start);
        }
        HnnWord::from_syllables(syl).unwrap()
    })
}

#[test]
fn fixture_file_matches_builtin() {
    let spec: RepSpec = serde_json::from_str(FIXTURE).unwrap();
    let from_file = spec.validate().unwrap();
    let builtin = schottky_q5().validate().unwrap();
    assert_eq!(from_file.membership().w_in_h_basis(), builtin.membership().w_in_h_basis());
    assert_eq!(from_file.h(), builtin.h());
}

#[test]
fn unknown_spec_fields_are_rejected() {
    let bad = FIXTURE.replacen("\"d\": 2", "\"d\": 2, \"extra\": 1", 1);
    let err = serde_json::from_str::<RepSpec>(&bad).unwrap_err();
    assert!(err.to_string().contains("extra"), "{err}");
}

#[test]
fn invalid_weights_name_the_field() {
    // constant weights parse but cannot define a stable letter
    let spec: Result<RepSpec, _> = serde_json::from_str(&FIXTURE.replace(r#"["1", "-1"]"#, r#"["1", "1"]"#));
    let err = match spec {
        Ok(spec) => spec.validate().unwrap_err().to_string(),
        Err(e) => e.to_string(),
    };
    assert!(err.contains("weights"), "{err}");
}

#[test]
fn ledger_rejects_non_canonical_words() {
    let w = HnnWord::from_syllables([(-1, GammaElement::generator(1, 1)), (1, GammaElement::generator(1, 1))]).unwrap();
    assert!(matches!(check_ledger(pi(), &w), Err(LinearizeError::NotCanonical(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pi_q_is_a_homomorphism(u in sym_word(6), v in sym_word(6)) {
        let (u, v) = (to_hnn_word(&u), to_hnn_word(&v));
        prop_assert_eq!(pi().evaluate(&u.concat(&v)), pi().evaluate(&u).mul(&pi().evaluate(&v)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn inverse_maps_to_inverse(u in sym_word(6)) {
        let u = to_hnn_word(&u);
        let prod = pi().evaluate(&u).mul(&pi().evaluate(&u.inverse()));
        prop_assert_eq!(prod, QMatrix::identity(2));
    }

    #[test]
    fn ledger_holds_on_canonical_words(w in canonical_word()) {
        let check = check_ledger(pi(), &w).unwrap();
        let total: i64 = w.syllables().iter().map(|s| s.power().abs()).sum();
        prop_assert_eq!(check.d_k, Exponent::from_integer(2 * total));
        prop_assert!(check.holds(), "{:?}", check);
        prop_assert!(check.nonscalar);
        prop_assert_eq!(pi().evaluate_normalized(&w).expand(), pi().evaluate(&w));
    }

    #[test]
    fn canonical_form_is_conjugation_invariant(w in canonical_word(), c in sym_word(3)) {
        let c = to_hnn_word(&c);
        let conj = c.concat(&w).concat(&c.inverse());
        let a = canonicalize(&w, pi().oracle()).unwrap();
        let b = canonicalize(&conj, pi().oracle()).unwrap();
        prop_assert_eq!(a.word.stable_length(), b.word.stable_length());
        let la = check_ledger(pi(), &a.word).unwrap();
        let lb = check_ledger(pi(), &b.word).unwrap();
        prop_assert_eq!(la.d_k, lb.d_k);
    }

    #[test]
    fn verdicts_agree_with_the_word_oracle(w in sym_word(8)) {
        let cert = certify_nontrivial(pi(), &to_hnn_word(&w));
        let trivial = bfs_canonical(&w).is_empty();
        prop_assert_eq!(cert.verdict == Verdict::Trivial, trivial, "{:?}", cert);
        prop_assert!(cert.verdict != Verdict::Indeterminate);
    }
}

#[test]
fn batch_is_deterministic() {
    let words: Vec<HnnWord> = common::all_words(3).iter().map(|w| to_hnn_word(w)).collect();
    let a = certify_batch(pi(), &words);
    let b = certify_batch(pi(), &words);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    for (w, c) in words.iter().zip(&a) {
        assert_eq!(&c.word, w);
    }
}
