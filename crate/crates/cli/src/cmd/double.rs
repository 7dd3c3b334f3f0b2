use std::path::{Path, PathBuf};

use serde::Serialize;

use hnnlin::linearize::{build_double_rep, AlternationDegree, RepSpec};
use hnnlin::words::{amalgam_normal_form, AmalgamWord};

use super::Summary;
use crate::error::CliError;
use crate::io::{check_generators, emit, read_json};

#[derive(Serialize)]
struct Evaluation {
    word: AmalgamWord,
    normal_form: AmalgamWord,
    identity: bool,
    #[serde(flatten)]
    degree: AlternationDegree,
    matches_prediction: bool,
}

pub fn double(specs: &[PathBuf], words: &Path, out: Option<&Path>) -> Summary {
    let (first, second): (RepSpec, RepSpec) = match specs {
        [one] => {
            let s: RepSpec = read_json(one, "spec")?;
            (s.clone(), s)
        }
        [a, b] => (read_json(a, "spec[0]")?, read_json(b, "spec[1]")?),
        _ => return Err(CliError::validation("spec", format!("expected one or two specs, got {}", specs.len()))),
    };
    let rep = build_double_rep(&first, &second)?;
    let words: Vec<AmalgamWord> = read_json(words, "words")?;
    let available = first.generators.len().min(second.generators.len());
    for (i, w) in words.iter().enumerate() {
        let used = w.syllables().iter().filter_map(|s| s.1.max_generator()).max();
        check_generators(&format!("words[{i}]"), used, available)?;
    }
    let results: Vec<Evaluation> = words
        .into_iter()
        .map(|word| {
            let degree = rep.alternation_degree(&word);
            Evaluation {
                normal_form: amalgam_normal_form(&word, rep.edge()),
                identity: rep.evaluate(&word).is_identity(),
                matches_prediction: degree.matches(),
                degree,
                word,
            }
        })
        .collect();
    emit(&results, out)?;
    let nonscalar = results.iter().filter(|r| r.degree.nonscalar).count();
    Ok(Some(format!("{} word(s), {nonscalar} with non-scalar image", results.len())))
}
