//! Farey sequences, unimodular transitions and chain validation.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Result, SpectrumError};
use crate::ratio::Ratio;
use crate::spectrum::{class_members, spectrum_h};

/// `F_n`: the ascending irreducible fractions in `[0, 1]` with denominator at
/// most `n`.
pub fn farey_sequence(n: u64) -> Result<Vec<Ratio>> {
    if n == 0 {
        return Err(SpectrumError::ZeroFareyOrder);
    }
    // next-term recurrence over neighbours (a/b, c/d)
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n);
    let mut out = vec![Ratio::zero()];
    while c <= n {
        let k = (n + b) / d;
        out.push(Ratio::new(c, d));
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    debug_assert_eq!(a, 1);
    debug_assert_eq!(b, 1);
    Ok(out)
}

/// `|p₂q₁ − p₁q₂| = 1`, the allowed-transition condition.
pub fn is_unimodular(nu1: &Ratio, nu2: &Ratio) -> bool {
    nu1.det(nu2).abs().is_one()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionChain {
    pub entries: Vec<Ratio>,
    /// `verdicts[i]` covers the step `entries[i] → entries[i+1]`.
    pub verdicts: Vec<bool>,
    /// Hausdorff dimension of each entry.
    pub classes: Vec<Ratio>,
}

impl TransitionChain {
    pub fn is_valid(&self) -> bool {
        self.verdicts.iter().all(|&ok| ok)
    }

    /// Indices of failing steps.
    pub fn failures(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .enumerate()
            .filter_map(|(i, &ok)| (!ok).then_some(i))
            .collect()
    }

    /// Determinant `p₂q₁ − p₁q₂` of step `i`.
    pub fn determinant(&self, i: usize) -> BigInt {
        self.entries[i].det(&self.entries[i + 1])
    }
}

pub fn validate_chain(entries: &[Ratio]) -> Result<TransitionChain> {
    if entries.len() < 2 {
        return Err(SpectrumError::ChainTooShort { len: entries.len() });
    }
    let classes = entries.iter().map(spectrum_h).collect::<Result<Vec<_>>>()?;
    let verdicts = entries
        .windows(2)
        .map(|w| is_unimodular(&w[0], &w[1]))
        .collect();
    Ok(TransitionChain {
        entries: entries.to_vec(),
        verdicts,
        classes,
    })
}

/// Every fraction between the Farey neighbours `left < right` whose
/// denominator does not exceed `max_den`, ascending and including both
/// anchors. Built by repeated mediant insertion, so consecutive elements
/// are unimodular.
pub fn mediant_refinement(left: &Ratio, right: &Ratio, max_den: u64) -> Result<Vec<Ratio>> {
    if !is_unimodular(left, right) || left >= right {
        return Err(SpectrumError::NotNeighbours {
            left: left.to_string(),
            right: right.to_string(),
            det: left.det(right).to_string(),
        });
    }
    let limit = BigInt::from(max_den);
    let mut out = vec![left.clone()];
    // in-order walk of the Stern–Brocot subtree between the anchors
    let mut stack = vec![(left.clone(), right.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let mid = lo.mediant(&hi);
        if *mid.denom() > limit {
            out.push(hi);
            continue;
        }
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremEntry {
    pub nu: Ratio,
    pub h: Ratio,
    /// Second element of the ascending member list of class `h`.
    pub second: Ratio,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FareyTheoremReport {
    pub order: u64,
    pub entries: Vec<TheoremEntry>,
}

impl FareyTheoremReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Checks that every interior element `ν` of `F_n` opens a universal class
/// `{ν, h, …}` whose second fraction is its own Hausdorff dimension `h ∈ (1,2)`.
pub fn farey_theorem_check(n: u64) -> Result<FareyTheoremReport> {
    let seq = farey_sequence(n)?;
    let interior = &seq[1..seq.len() - 1];
    let mut entries = Vec::with_capacity(interior.len());
    for nu in interior {
        let h = spectrum_h(nu)?;
        let class = class_members(&h, 2)?;
        let pass = h > 1 && h < 2 && class.members[0] == *nu && class.members[1] == h;
        entries.push(TheoremEntry {
            nu: nu.clone(),
            second: class.members[1].clone(),
            h,
            pass,
        });
    }
    Ok(FareyTheoremReport { order: n, entries })
}
