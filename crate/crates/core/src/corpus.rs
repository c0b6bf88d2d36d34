//! Seeded random multi-twisted codes.
//!
//! Generation is sequential from a single ChaCha stream, so a seed fixes the
//! whole corpus regardless of how it is later processed.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, Poly};
use crate::decomp;
use crate::error::{Error, Result};
use crate::mtcode::{MTCode, MTShape};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub size: usize,
    pub seed: u64,
    pub q_values: Vec<u32>,
    pub ell: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
    pub rho: RangeInclusive<usize>,
    /// How many leading instances are drawn by rejection until the cofactors
    /// are pairwise coprime.
    pub decomposable: usize,
    /// Rejection attempts per decomposable instance.
    pub max_attempts: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            size: 500,
            seed: 42,
            q_values: vec![2, 3, 4, 5],
            ell: 1..=3,
            m: 1..=6,
            rho: 0..=3,
            decomposable: 125,
            max_attempts: 10_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub index: usize,
    pub code: MTCode,
    /// Drawn by rejection sampling for the coprime-cofactor hypothesis.
    pub forced_decomposable: bool,
}

/// Draws codes with parameters uniform over the configured ranges and
/// coefficients uniform over `F_q`.
pub struct CodeSampler {
    rng: ChaCha8Rng,
    fields: BTreeMap<u32, Field>,
}

impl CodeSampler {
    pub fn new(seed: u64) -> Self {
        CodeSampler { rng: ChaCha8Rng::seed_from_u64(seed), fields: BTreeMap::new() }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn field(&mut self, q: u32) -> Result<Field> {
        if let Some(f) = self.fields.get(&q) {
            return Ok(f.clone());
        }
        let f = Field::of_order(q)?;
        self.fields.insert(q, f.clone());
        Ok(f)
    }

    pub fn shape(&mut self, q_values: &[u32], ell: RangeInclusive<usize>, m: RangeInclusive<usize>) -> Result<MTShape> {
        let q = *q_values.choose(&mut self.rng).ok_or(Error::PreconditionViolated("no field orders"))?;
        let field = self.field(q)?;
        let ell = self.rng.gen_range(ell);
        let lambdas = (0..ell).map(|_| self.rng.gen_range(1..q)).collect::<Vec<_>>();
        let ms = (0..ell).map(|_| self.rng.gen_range(m.clone())).collect::<Vec<_>>();
        MTShape::from_codes(&field, &lambdas, &ms)
    }

    /// A generator tuple with uniform coefficients below each block length.
    pub fn tuple(&mut self, shape: &MTShape) -> Vec<Poly> {
        let q = shape.field().order();
        (0..shape.ell())
            .map(|i| {
                let codes: Vec<u32> = (0..shape.m(i)).map(|_| self.rng.gen_range(0..q)).collect();
                Poly::from_codes(shape.field(), &codes).expect("codes below q")
            })
            .collect()
    }

    pub fn code(&mut self, shape: MTShape, rho: usize) -> MTCode {
        let gens = (0..rho).map(|_| self.tuple(&shape)).collect();
        MTCode::new(shape, gens).expect("tuples match the shape")
    }
}

pub fn generate(config: &CorpusConfig) -> Result<Vec<CorpusEntry>> {
    let mut sampler = CodeSampler::new(config.seed);
    let mut out = Vec::with_capacity(config.size);
    for index in 0..config.size {
        if index < config.decomposable {
            out.push(CorpusEntry { index, code: decomposable_instance(&mut sampler, config)?, forced_decomposable: true });
        } else {
            let shape = sampler.shape(&config.q_values, config.ell.clone(), config.m.clone())?;
            let rho = sampler.rng().gen_range(config.rho.clone());
            out.push(CorpusEntry { index, code: sampler.code(shape, rho), forced_decomposable: false });
        }
    }
    Ok(out)
}

/// Rejection sampling with at least two blocks (when the range allows) and at
/// least one generator, so the hypothesis is not met trivially.
fn decomposable_instance(sampler: &mut CodeSampler, config: &CorpusConfig) -> Result<MTCode> {
    let ell_lo = (*config.ell.start()).max(2).min(*config.ell.end());
    let rho_lo = (*config.rho.start()).max(1).min(*config.rho.end());
    for _ in 0..config.max_attempts {
        let shape = sampler.shape(&config.q_values, ell_lo..=*config.ell.end(), config.m.clone())?;
        let rho = sampler.rng().gen_range(rho_lo..=*config.rho.end());
        let code = sampler.code(shape, rho);
        if decomp::is_decomposable(&code)?.decomposable {
            return Ok(code);
        }
    }
    Err(Error::PreconditionViolated("no decomposable instance within the attempt budget"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_corpus() {
        let cfg = CorpusConfig { size: 30, decomposable: 10, ..Default::default() };
        let a = generate(&cfg).unwrap();
        let b = generate(&cfg).unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.code == y.code));
        let other = generate(&CorpusConfig { seed: 7, ..cfg }).unwrap();
        assert!(a.iter().zip(&other).any(|(x, y)| x.code != y.code));
    }

    #[test]
    fn respects_ranges() {
        let cfg = CorpusConfig { size: 60, decomposable: 20, ..Default::default() };
        for e in generate(&cfg).unwrap() {
            let s = e.code.shape();
            assert!(cfg.q_values.contains(&s.field().order()));
            assert!(cfg.ell.contains(&s.ell()));
            assert!(s.block_lengths().iter().all(|m| cfg.m.contains(m)));
            assert!(cfg.rho.contains(&e.code.rho()));
            if e.forced_decomposable {
                assert!(decomp::is_decomposable(&e.code).unwrap().decomposable);
                assert!(s.ell() >= 2 && e.code.rho() >= 1);
            }
        }
    }

    #[test]
    fn empty_corpus() {
        assert!(generate(&CorpusConfig { size: 0, ..Default::default() }).unwrap().is_empty());
    }
}
