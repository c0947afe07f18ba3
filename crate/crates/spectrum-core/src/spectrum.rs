//! Fractal spectrum, universal classes and duality.
//!
//! A filling factor `ν > 0` sits in a unit band `(m, m+1)`. In even bands the
//! Hausdorff dimension falls as ν grows (`h = m + 2 − ν`), in odd bands it rises
//! (`h = ν − m + 1`), so every band covers `(1, 2)` once. Odd integers belong
//! to the fermion border class `h = 1`, even integers to the boson class `h = 2`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Result, SpectrumError};
use crate::ratio::Ratio;

/// Hausdorff dimension of the class containing the filling factor `nu`.
pub fn spectrum_h(nu: &Ratio) -> Result<Ratio> {
    if !nu.is_positive() {
        return Err(SpectrumError::NonPositiveFilling { nu: nu.clone() });
    }
    let band = nu.floor();
    let band_is_even = band.is_even();
    if nu.is_integer() {
        return Ok(if band_is_even {
            Ratio::from_integer(2)
        } else {
            Ratio::one()
        });
    }
    let band = Ratio::from_integer(band);
    Ok(if band_is_even {
        &(&band + 2) - nu
    } else {
        &(nu - &band) + 1
    })
}

/// A universal class: one Hausdorff dimension shared by a family of filling
/// factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalClass {
    pub h: Ratio,
    /// Ascending: `2−h, h, 4−h, 2+h, 6−h, 4+h, …`
    pub members: Vec<Ratio>,
    /// `members[i] / 2`
    pub spins: Vec<Ratio>,
}

/// The first `count` filling factors of the class with dimension `h`.
pub fn class_members(h: &Ratio, count: usize) -> Result<UniversalClass> {
    if !(*h > 1 && *h < 2) {
        return Err(SpectrumError::ClassOutOfRange { h: h.clone() });
    }
    let low = 2 - h;
    let members: Vec<Ratio> = (0..count)
        .map(|i| {
            let offset = Ratio::from_integer(BigInt::from(2 * (i / 2)));
            if i % 2 == 0 {
                &offset + &low
            } else {
                &offset + h
            }
        })
        .collect();
    let spins = members.iter().map(Ratio::half).collect();
    Ok(UniversalClass {
        h: h.clone(),
        members,
        spins,
    })
}

/// The dual class `h̃ = 3 − h`.
pub fn dual_class(h: &Ratio) -> Result<Ratio> {
    if *h < 1 || *h > 2 {
        return Err(SpectrumError::DualClassOutOfRange { h: h.clone() });
    }
    Ok(3 - h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualPair {
    pub nu: Ratio,
    pub nu_dual: Ratio,
    pub h: Ratio,
    pub h_dual: Ratio,
}

impl DualPair {
    /// Re-checks the pair: dimensions sum to 3, both factors map to their
    /// stated classes, and the factors reflect about the band centre.
    pub fn is_consistent(&self) -> bool {
        let centre = Ratio::from_integer(2 * self.nu.floor() + 1);
        &self.h + &self.h_dual == 3
            && spectrum_h(&self.nu).as_ref() == Ok(&self.h)
            && spectrum_h(&self.nu_dual).as_ref() == Ok(&self.h_dual)
            && &self.nu + &self.nu_dual == centre
    }
}

/// In-band dual partner `ν̃ = 2⌊ν⌋ + 1 − ν`.
pub fn dual_filling(nu: &Ratio) -> Result<DualPair> {
    if !nu.is_positive() {
        return Err(SpectrumError::NonPositiveFilling { nu: nu.clone() });
    }
    if nu.is_integer() {
        return Err(SpectrumError::IntegerFilling { nu: nu.clone() });
    }
    let centre = Ratio::from_integer(2 * nu.floor() + 1);
    let nu_dual = &centre - nu;
    let h = spectrum_h(nu)?;
    let h_dual = spectrum_h(&nu_dual)?;
    Ok(DualPair {
        nu: nu.clone(),
        nu_dual,
        h,
        h_dual,
    })
}
