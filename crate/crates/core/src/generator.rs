//! Seeded random generation of e-repetition-free words by read/backtrack.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dyadic::DyadicDetector;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::repetition::DetectorStatus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeneratorPolicy {
    /// Re-draw at the same position excluding rejected letters; back off one
    /// position when every letter has been rejected.
    #[default]
    Retry,
    /// Drop the whole last period of the found repetition.
    PeriodCut,
}

#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub e: Exponent,
    pub alphabet: Vec<u8>,
    pub target_length: usize,
    pub seed: u64,
    pub max_steps: u64,
    pub policy: GeneratorPolicy,
}

impl GeneratorConfig {
    pub fn new(e: Exponent, alphabet: &[u8], target_length: usize, seed: u64) -> Self {
        GeneratorConfig {
            e,
            alphabet: alphabet.to_vec(),
            target_length,
            seed,
            max_steps: 1_000_000,
            policy: GeneratorPolicy::Retry,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphabet.is_empty() {
            return Err(Error::Config("alphabet is empty".into()));
        }
        let mut sorted = self.alphabet.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Config("alphabet letters must be distinct".into()));
        }
        if self.target_length == 0 {
            return Err(Error::Config("length must be positive".into()));
        }
        if self.max_steps == 0 {
            return Err(Error::Config("max steps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorOutcome {
    Complete(Vec<u8>),
    Exhausted {
        /// Longest repetition-free word reached.
        longest: Vec<u8>,
        steps: u64,
        /// True when the search space was exhausted before the step budget.
        dead_end: bool,
    },
}

impl GeneratorOutcome {
    pub fn word(&self) -> &[u8] {
        match self {
            GeneratorOutcome::Complete(w) => w,
            GeneratorOutcome::Exhausted { longest, .. } => longest,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, GeneratorOutcome::Complete(_))
    }
}

pub fn generate(cfg: &GeneratorConfig) -> Result<GeneratorOutcome> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut det = DyadicDetector::new(cfg.e);
    let mut longest: Vec<u8> = Vec::new();
    let mut steps = 0u64;
    // rejected[p] = letters already refused at position p + 1
    let mut rejected: Vec<Vec<u8>> = vec![Vec::new()];
    let mut pool = Vec::with_capacity(cfg.alphabet.len());

    while steps < cfg.max_steps {
        let n = det.len();
        if n >= cfg.target_length {
            return Ok(GeneratorOutcome::Complete(det.text().as_slice().to_vec()));
        }
        let c = match cfg.policy {
            GeneratorPolicy::Retry => {
                pool.clear();
                pool.extend(cfg.alphabet.iter().filter(|c| !rejected[n].contains(c)));
                match pool.choose(&mut rng) {
                    Some(&c) => c,
                    None => {
                        // Dead end: refuse the previous letter too.
                        rejected[n].clear();
                        let Some(prev) = det.text().as_slice().last().copied() else {
                            return Ok(GeneratorOutcome::Exhausted {
                                longest,
                                steps,
                                dead_end: true,
                            });
                        };
                        det.backtrack().expect("text is non-empty");
                        steps += 1;
                        rejected.pop();
                        rejected[n - 1].push(prev);
                        continue;
                    }
                }
            }
            GeneratorPolicy::PeriodCut => *cfg.alphabet.choose(&mut rng).expect("non-empty"),
        };
        steps += 1;
        match det.read(c) {
            DetectorStatus::Free => {
                if det.len() > longest.len() {
                    longest = det.text().as_slice().to_vec();
                }
                rejected.push(Vec::new());
            }
            DetectorStatus::Found { report, .. } => {
                let cut = match cfg.policy {
                    GeneratorPolicy::Retry => {
                        rejected[n].push(c);
                        1
                    }
                    GeneratorPolicy::PeriodCut => report.period,
                };
                for _ in 0..cut {
                    det.backtrack().expect("cut stays within the text");
                }
                steps += cut as u64;
                rejected.truncate(det.len() + 1);
            }
        }
    }
    if det.len() >= cfg.target_length {
        return Ok(GeneratorOutcome::Complete(det.text().as_slice().to_vec()));
    }
    Ok(GeneratorOutcome::Exhausted {
        longest,
        steps,
        dead_end: false,
    })
}
