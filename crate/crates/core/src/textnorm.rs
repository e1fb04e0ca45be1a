//! LDC/NIST-style token filtering applied to references and hypotheses
//! before alignment, and to raw text before language model training.
//!
//! Normalization is total: it never fails, and an empty output sequence is
//! legal. Hesitation handling is split between two mutually exclusive modes:
//! `optional_hesitation` flags hesitations so the aligner may delete them at
//! zero cost, while `drop_hesitations` removes them outright on both sides.

use std::collections::BTreeSet;
use std::io::{self, BufRead};

use crate::error::{Error, Result};

/// Canonical filled-pause symbol used by the reference transcripts.
pub const HESITATION: &str = "%hesitation";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormRules {
    /// Remove `<...>` markers (breath, laughter, music, ...).
    pub remove_non_speech: bool,
    /// Remove tokens ending in `-`.
    pub remove_partial_words: bool,
    /// Strip leading/trailing ASCII punctuation; word-internal `'` and `-` survive.
    pub strip_punctuation: bool,
    /// Flag hesitations as optionally deletable for the aligner.
    pub optional_hesitation: bool,
    /// Remove hesitation tokens entirely.
    pub drop_hesitations: bool,
    /// Fold tokens to lowercase.
    pub case_fold: bool,
    /// Spellings recognized as hesitations. Variants like "uh"/"um" are not
    /// mapped automatically; add them here if the transcripts use them.
    pub hesitation_lexicon: BTreeSet<String>,
}

impl Default for NormRules {
    fn default() -> Self {
        NormRules {
            remove_non_speech: true,
            remove_partial_words: true,
            strip_punctuation: true,
            optional_hesitation: false,
            drop_hesitations: false,
            case_fold: true,
            hesitation_lexicon: [HESITATION.to_string()].into(),
        }
    }
}

impl NormRules {
    /// All filtering disabled; normalize becomes the identity on tokens.
    pub fn off() -> Self {
        NormRules {
            remove_non_speech: false,
            remove_partial_words: false,
            strip_punctuation: false,
            optional_hesitation: false,
            drop_hesitations: false,
            case_fold: false,
            hesitation_lexicon: [HESITATION.to_string()].into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.optional_hesitation && self.drop_hesitations {
            return Err(Error::BadNormRules(
                "optional_hesitation and drop_hesitations are mutually exclusive".into(),
            ));
        }
        Ok(())
    }

    /// Apply one `key=value` override from a config file or the command line.
    pub fn apply_kv(&mut self, key: &str, value: &str) -> Result<()> {
        let flag = |v: &str| -> Result<bool> {
            match v {
                "true" | "1" | "yes" | "on" => Ok(true),
                "false" | "0" | "no" | "off" => Ok(false),
                other => Err(Error::Config(format!(
                    "expected a boolean for {key}, got {other:?}"
                ))),
            }
        };
        match key {
            "remove_non_speech" => self.remove_non_speech = flag(value)?,
            "remove_partial_words" => self.remove_partial_words = flag(value)?,
            "strip_punctuation" => self.strip_punctuation = flag(value)?,
            "optional_hesitation" => self.optional_hesitation = flag(value)?,
            "drop_hesitations" => self.drop_hesitations = flag(value)?,
            "case_fold" => self.case_fold = flag(value)?,
            "hesitation_token" => {
                self.hesitation_lexicon.insert(value.to_string());
            }
            other => {
                return Err(Error::Config(format!("unknown normalization key {other:?}")));
            }
        }
        Ok(())
    }
}

/// A normalized token plus the per-token flags the aligner consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormToken {
    pub text: String,
    pub hesitation: bool,
    /// Deletable at zero alignment cost.
    pub optional: bool,
}

impl NormToken {
    pub fn plain(text: impl Into<String>) -> Self {
        NormToken {
            text: text.into(),
            hesitation: false,
            optional: false,
        }
    }
}

fn is_non_speech_marker(token: &str) -> bool {
    token.len() >= 2 && token.starts_with('<') && token.ends_with('>')
}

fn strip_edge_punctuation(token: &str) -> &str {
    token
        .trim_start_matches(|c: char| c.is_ascii_punctuation())
        .trim_end_matches(|c: char| c.is_ascii_punctuation())
}

/// Normalize a pre-split token sequence. Total: malformed tokens are filtered
/// or passed through, never rejected.
pub fn normalize<S: AsRef<str>>(tokens: &[S], rules: &NormRules) -> Vec<NormToken> {
    let mut out = Vec::with_capacity(tokens.len());
    for raw in tokens {
        let raw = raw.as_ref();
        if raw.is_empty() {
            continue;
        }
        if rules.remove_non_speech && is_non_speech_marker(raw) {
            continue;
        }
        let folded = if rules.case_fold {
            raw.to_lowercase()
        } else {
            raw.to_string()
        };
        // Hesitations are canonical symbols: recognize them before the
        // punctuation pass would strip the leading '%'.
        if rules.hesitation_lexicon.contains(&folded) {
            if rules.drop_hesitations {
                continue;
            }
            out.push(NormToken {
                text: folded,
                hesitation: true,
                optional: rules.optional_hesitation,
            });
            continue;
        }
        if rules.remove_partial_words && folded.ends_with('-') {
            continue;
        }
        let text = if rules.strip_punctuation {
            strip_edge_punctuation(&folded)
        } else {
            folded.as_str()
        };
        if text.is_empty() {
            continue;
        }
        out.push(NormToken::plain(text));
    }
    out
}

/// Normalize one line of raw text into plain token strings.
pub fn normalize_line(line: &str, rules: &NormRules) -> Vec<String> {
    let split: Vec<&str> = line.split_ascii_whitespace().collect();
    normalize(&split, rules).into_iter().map(|t| t.text).collect()
}

/// Stream a corpus line by line, yielding normalized token sequences.
/// Lines that normalize to nothing are dropped. The input is never loaded
/// whole, so corpora of hundreds of millions of words stream in bounded
/// memory.
pub fn normalize_corpus<'a, R: BufRead + 'a>(
    reader: R,
    rules: &'a NormRules,
) -> impl Iterator<Item = io::Result<Vec<String>>> + 'a {
    reader.lines().filter_map(move |line| match line {
        Ok(line) => {
            let tokens = normalize_line(&line, rules);
            if tokens.is_empty() {
                None
            } else {
                Some(Ok(tokens))
            }
        }
        Err(e) => Some(Err(e)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn texts(tokens: &[NormToken]) -> Vec<&str> {
        tokens.iter().map(|t| t.text.as_str()).collect()
    }

    #[test]
    fn applies_every_rule_once() {
        let rules = NormRules::default();
        let out = normalize(&["The", "cat-", "<breath>", "sat."], &rules);
        assert_eq!(texts(&out), vec!["the", "sat"]);
    }

    #[test]
    fn drop_hesitations_removes_them() {
        let rules = NormRules {
            drop_hesitations: true,
            ..NormRules::default()
        };
        let out = normalize(&["%hesitation", "yes"], &rules);
        assert_eq!(texts(&out), vec!["yes"]);
    }

    #[test]
    fn optional_hesitation_flags_without_removing() {
        let rules = NormRules {
            optional_hesitation: true,
            ..NormRules::default()
        };
        let out = normalize(&["%hesitation", "yes"], &rules);
        assert_eq!(texts(&out), vec!["%hesitation", "yes"]);
        assert!(out[0].hesitation && out[0].optional);
        assert!(!out[1].hesitation && !out[1].optional);
    }

    #[test]
    fn empty_input_is_legal() {
        let out = normalize::<&str>(&[], &NormRules::default());
        assert!(out.is_empty());
    }

    #[test]
    fn all_rules_off_is_identity() {
        let rules = NormRules::off();
        let input = ["The", "cat-", "<breath>", "sat.", "%hesitation"];
        let out = normalize(&input, &rules);
        assert_eq!(texts(&out), input.to_vec());
        // The hesitation flag is informational metadata, set regardless.
        assert!(out[4].hesitation && !out[4].optional);
    }

    #[test]
    fn contractions_and_internal_hyphens_survive() {
        let rules = NormRules {
            remove_partial_words: false,
            ..NormRules::default()
        };
        let out = normalize(&["don't,", "mother-in-law", "'tis", "students'"], &rules);
        assert_eq!(texts(&out), vec!["don't", "mother-in-law", "tis", "students"]);
    }

    #[test]
    fn mutually_exclusive_hesitation_modes_rejected() {
        let rules = NormRules {
            optional_hesitation: true,
            drop_hesitations: true,
            ..NormRules::default()
        };
        assert!(rules.validate().is_err());
    }

    #[test]
    fn corpus_lines_normalize_and_blank_lines_drop() {
        let rules = NormRules::default();
        let lines: Vec<Vec<String>> = normalize_corpus(Cursor::new("A b\n\nc\n"), &rules)
            .collect::<io::Result<_>>()
            .unwrap();
        assert_eq!(lines, vec![vec!["a", "b"], vec!["c"]]);
    }

    #[test]
    fn punctuation_only_line_drops() {
        let rules = NormRules::default();
        let lines: Vec<Vec<String>> = normalize_corpus(Cursor::new("... --- !!\n"), &rules)
            .collect::<io::Result<_>>()
            .unwrap();
        assert!(lines.is_empty());
    }

    #[test]
    fn config_kv_roundtrip() {
        let mut rules = NormRules::default();
        rules.apply_kv("case_fold", "off").unwrap();
        rules.apply_kv("hesitation_token", "uh").unwrap();
        assert!(!rules.case_fold);
        assert!(rules.hesitation_lexicon.contains("uh"));
        assert!(rules.apply_kv("case_fold", "maybe").is_err());
        assert!(rules.apply_kv("bogus", "1").is_err());
    }
}
