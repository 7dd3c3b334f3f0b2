use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use hnnlin::exact::{QMatrix, ScalarMatrix};
use hnnlin::linearize::{build_pi_q, certify_batch, WeightData};
use hnnlin::words::{britton_reduce, cyclically_reduce, HnnWord};

use super::Summary;
use crate::io::{check_generators, emit, read_json, read_spec};

#[derive(Serialize)]
struct Reduction {
    word: HnnWord,
    reduced: HnnWord,
    cyclically_reduced: HnnWord,
    in_gamma: bool,
}

pub fn reduce(spec: &Path, word: &Path, out: Option<&Path>) -> Summary {
    let spec = read_spec(spec)?;
    let word: HnnWord = read_json(word, "word")?;
    check_generators("word", word.max_generator(), spec.spec().generators.len())?;
    let oracle = spec.membership();
    let reduced = britton_reduce(&word, oracle);
    let result = Reduction { cyclically_reduced: cyclically_reduce(&word, oracle), in_gamma: reduced.is_in_gamma(), word, reduced };
    emit(&result, out)?;
    Ok(Some(format!("reduced to {} syllable(s)", result.reduced.syllables().len())))
}

#[derive(Serialize)]
struct Build<'a> {
    name: Option<&'a str>,
    d: usize,
    h: &'a ScalarMatrix,
    weights: &'a WeightData,
    w_in_h_basis: &'a ScalarMatrix,
    generators_in_h_basis: &'a [ScalarMatrix],
    stable_letter: QMatrix,
}

pub fn linearize_build(spec: &Path, out: Option<&Path>) -> Summary {
    let spec = read_spec(spec)?;
    let pi = build_pi_q(spec.spec())?;
    let build = Build {
        name: spec.spec().name.as_deref(),
        d: spec.dim(),
        h: spec.h(),
        weights: spec.weights(),
        w_in_h_basis: spec.membership().w_in_h_basis(),
        generators_in_h_basis: spec.membership().generators_in_h_basis().matrices(),
        stable_letter: pi.stable_image(1),
    };
    emit(&build, out)?;
    Ok(Some(format!("spec {} is valid (d = {})", build.name.unwrap_or("<unnamed>"), build.d)))
}

pub fn certify(spec: &Path, words: &Path, out: Option<&Path>) -> Summary {
    let spec = read_spec(spec)?;
    let words: Vec<HnnWord> = read_json(words, "words")?;
    for (i, w) in words.iter().enumerate() {
        check_generators(&format!("words[{i}]"), w.max_generator(), spec.spec().generators.len())?;
    }
    let pi = build_pi_q(spec.spec())?;
    let certs = certify_batch(&pi, &words);
    emit(&certs, out)?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for c in &certs {
        let key = serde_json::to_value(c.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        *counts.entry(key).or_default() += 1;
    }
    let parts: Vec<String> = counts.iter().map(|(k, n)| format!("{n} {k}")).collect();
    Ok(Some(format!("{} word(s): {}", certs.len(), parts.join(", "))))
}
