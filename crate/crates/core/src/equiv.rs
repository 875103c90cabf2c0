//! Equivalence of the binomial parameters and the rank-metric codes they
//! induce.
//!
//! Two parameters b, c with norms N_b, N_c different from 1 give
//! GL-equivalent subspaces U_b, U_c exactly when N_b = N_c, and
//! GammaL-equivalent ones exactly when N_c is a p-power of N_b. The code
//! attached to b is C_b = {x -> a x + beta (b x^q + x^(q^4))}; it has
//! q^12 codewords and is maximum rank distance precisely when every nonzero
//! codeword has rank at least 5, which happens iff U_b is maximum scattered.

use crate::error::{Error, Result};
use crate::field::{Elt, TowerCtx};
use crate::linearized::{kernel_dim_of_matrix, Mat};
use crate::scatter::is_scattered_norm;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

fn norms_checked(ctx: &TowerCtx, b: &Elt, c: &Elt) -> Result<(Elt, Elt)> {
    if b.is_zero() || c.is_zero() {
        return Err(Error::ZeroInput);
    }
    let nb = ctx.norm_q6_q3(b);
    let nc = ctx.norm_q6_q3(c);
    if nb.is_one(ctx) || nc.is_one(ctx) {
        return Err(Error::NormOne);
    }
    Ok((nb, nc))
}

/// U_b and U_c lie in one GL(2, q^6)-orbit iff their norms coincide.
pub fn gl_equivalent(ctx: &TowerCtx, b: &Elt, c: &Elt) -> Result<bool> {
    let (nb, nc) = norms_checked(ctx, b, c)?;
    Ok(nb == nc)
}

/// U_b and U_c lie in one GammaL(2, q^6)-orbit iff N_c = N_b^(p^j) for some
/// j < 3e.
pub fn gammal_equivalent(ctx: &TowerCtx, b: &Elt, c: &Elt) -> Result<bool> {
    let (nb, nc) = norms_checked(ctx, b, c)?;
    let mut t = nb;
    for _ in 0..3 * ctx.e() {
        if t == nc {
            return Ok(true);
        }
        t = ctx.frob_p(&t);
    }
    Ok(false)
}

/// Partition of a set of norms into orbits of N -> N^p.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub gamma_size: u64,
    pub orbit_count: u64,
    /// 3e, the largest possible orbit on F_{q^3}.
    pub max_orbit_size: u32,
    /// ceil(gamma_size / 3e); each orbit is one GammaL-class, so the class
    /// count can never fall below this.
    pub orbit_lower_bound: u64,
    pub bound_holds: bool,
    /// Orbits sorted by smallest member; each orbit starts at its smallest
    /// member and follows N -> N^p.
    pub orbits: Vec<Vec<Elt>>,
}

/// Splits a Frobenius-closed set of nonzero norms in F_{q^3} into orbits of
/// N -> N^p. Fails with NotClosed if some p-power image escapes the set.
pub fn frobenius_orbits(ctx: &TowerCtx, gamma: &[Elt]) -> Result<OrbitReport> {
    for n in gamma {
        if n.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !ctx.in_subfield(n, 3)? {
            return Err(Error::NotInSubfield { k: 3 });
        }
    }
    let set: BTreeSet<Elt> = gamma.iter().cloned().collect();
    let mut remaining = set.clone();
    let mut orbits: Vec<Vec<Elt>> = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let mut orbit = Vec::new();
        let mut x = seed.clone();
        loop {
            if !set.contains(&x) {
                return Err(Error::NotClosed);
            }
            remaining.remove(&x);
            orbit.push(x.clone());
            x = ctx.frob_p(&x);
            if x == seed {
                break;
            }
        }
        orbits.push(orbit);
    }
    let max_orbit_size = 3 * ctx.e();
    let gamma_size = set.len() as u64;
    let orbit_lower_bound = gamma_size.div_ceil(max_orbit_size as u64);
    let orbit_count = orbits.len() as u64;
    Ok(OrbitReport {
        gamma_size,
        orbit_count,
        max_orbit_size,
        orbit_lower_bound,
        bound_holds: orbit_count >= orbit_lower_bound,
        orbits,
    })
}

/// How the codewords of C_b are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MrdMode {
    /// Every pair (a, beta); only feasible while q^12 <= 2^22.
    Exhaustive,
    /// Every monomial codeword a x plus `sample_size` random pairs (a, beta)
    /// with beta != 0, drawn from a seeded generator.
    Sampled { sample_size: u64, seed: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct MrdReport {
    pub b: Elt,
    pub n: Elt,
    pub scattered: bool,
    pub mode: MrdMode,
    /// q^12 codewords in all.
    pub code_size: u128,
    /// 12e: the words are F_p-linear in (a, beta), and distinct pairs give
    /// distinct q-polynomial coefficient vectors.
    pub code_dimension_over_fp: u32,
    pub codewords_checked: u64,
    /// Smallest rank seen among checked nonzero codewords; exact in
    /// exhaustive mode, an upper estimate of the true minimum otherwise.
    pub min_nonzero_rank: u32,
    /// (rank, count) over every checked codeword, the zero word included.
    pub rank_distribution: Vec<(u32, u64)>,
    /// min_nonzero_rank == 5, the maximum-rank-distance condition for a
    /// dimension-12e code in this ambient space.
    pub is_mrd: bool,
    pub agrees_with_scatteredness: bool,
}

/// Rank of the codeword a x + beta b x^q + beta x^(q^4) from precomputed
/// Frobenius conjugates fa[i] = a^(q^i), fbb[i] = (beta b)^(q^i),
/// fbe[i] = beta^(q^i).
fn rank_from_conjugates(ctx: &TowerCtx, fa: &[Elt], fbb: &[Elt], fbe: &[Elt]) -> u32 {
    let zero = ctx.zero();
    let mut rows = Vec::with_capacity(6);
    for i in 0..6usize {
        let mut row = Vec::with_capacity(6);
        for j in 0..6usize {
            // Dickson entry (i, j) is coefficient (j - i) mod 6, raised to q^i.
            row.push(match (j + 6 - i) % 6 {
                0 => fa[i].clone(),
                1 => fbb[i].clone(),
                4 => fbe[i].clone(),
                _ => zero.clone(),
            });
        }
        rows.push(row);
    }
    6 - kernel_dim_of_matrix(ctx, &Mat::from_rows(rows))
}

fn conjugates(ctx: &TowerCtx, x: &Elt) -> Vec<Elt> {
    (0..6).map(|i| ctx.frobenius(x, i)).collect()
}

/// Distribution accumulator: counts per rank 0..=6 plus the running minimum
/// over nonzero codewords.
#[derive(Clone)]
struct RankTally {
    counts: [u64; 7],
    min_nonzero: u32,
}

impl RankTally {
    fn new() -> RankTally {
        RankTally {
            counts: [0; 7],
            min_nonzero: 6,
        }
    }

    fn record(&mut self, rank: u32, zero_word: bool) {
        self.counts[rank as usize] += 1;
        if !zero_word && rank < self.min_nonzero {
            self.min_nonzero = rank;
        }
    }

    fn merge(mut self, other: &RankTally) -> RankTally {
        for (acc, c) in self.counts.iter_mut().zip(other.counts) {
            *acc += c;
        }
        self.min_nonzero = self.min_nonzero.min(other.min_nonzero);
        self
    }
}

fn exhaustive_scan(ctx: &TowerCtx, b: &Elt) -> Result<RankTally> {
    let size = ctx.field_size() * ctx.field_size();
    if size > 1 << 22 {
        return Err(Error::EnumerationTooLarge {
            size,
            limit: 1 << 22,
        });
    }
    let betas: Vec<Elt> = ctx.all_elements().collect();
    let tally = betas
        .par_iter()
        .map(|beta| {
            let mut local = RankTally::new();
            let beta_zero = beta.is_zero();
            let fbb = conjugates(ctx, &ctx.mul(beta, b));
            let fbe = conjugates(ctx, beta);
            for a in ctx.all_elements() {
                let zero_word = beta_zero && a.is_zero();
                let fa = conjugates(ctx, &a);
                local.record(rank_from_conjugates(ctx, &fa, &fbb, &fbe), zero_word);
            }
            local
        })
        .reduce(RankTally::new, |acc, t| acc.merge(&t));
    Ok(tally)
}

fn sampled_scan(ctx: &TowerCtx, b: &Elt, sample_size: u64, seed: u64) -> RankTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = RankTally::new();
    let zeros = vec![ctx.zero(); 6];
    for a in ctx.all_elements() {
        if a.is_zero() {
            continue;
        }
        let fa = conjugates(ctx, &a);
        tally.record(rank_from_conjugates(ctx, &fa, &zeros, &zeros), false);
    }
    for _ in 0..sample_size {
        let a = ctx.random_elt(&mut rng);
        let beta = loop {
            let v = ctx.random_elt(&mut rng);
            if !v.is_zero() {
                break v;
            }
        };
        let fa = conjugates(ctx, &a);
        let fbb = conjugates(ctx, &ctx.mul(&beta, b));
        let fbe = conjugates(ctx, &beta);
        tally.record(rank_from_conjugates(ctx, &fa, &fbb, &fbe), false);
    }
    tally
}

/// Checks the maximum-rank-distance property of C_b against the
/// scatteredness of U_b.
pub fn mrd_check(ctx: &TowerCtx, b: &Elt, mode: MrdMode) -> Result<MrdReport> {
    if b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = ctx.norm_q6_q3(b);
    let scattered = is_scattered_norm(ctx, &n)?;
    let tally = match mode {
        MrdMode::Exhaustive => exhaustive_scan(ctx, b)?,
        MrdMode::Sampled { sample_size, seed } => sampled_scan(ctx, b, sample_size, seed),
    };
    let rank_distribution: Vec<(u32, u64)> = tally
        .counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(r, &c)| (r as u32, c))
        .collect();
    let codewords_checked = tally.counts.iter().sum();
    let is_mrd = tally.min_nonzero == 5;
    Ok(MrdReport {
        b: b.clone(),
        n,
        scattered,
        mode,
        code_size: ctx.field_size() * ctx.field_size(),
        code_dimension_over_fp: 12 * ctx.e(),
        codewords_checked,
        min_nonzero_rank: tally.min_nonzero,
        rank_distribution,
        is_mrd,
        agrees_with_scatteredness: is_mrd == scattered,
    })
}
