use crate::{ComplexValue, SheetPoint};

/// A complex order together with its image in the closed first quadrant.
///
/// `K_{-ν}(z) = K_ν(z)` and `K_{ν̄}(z̄) = conj K_ν(z)`, so zeros for any `ν`
/// follow from those at `canonical_nu`: negation leaves them unchanged and
/// conjugation reflects them through the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    pub nu: ComplexValue,
    pub canonical_nu: ComplexValue,
    pub conj_applied: bool,
    pub negate_applied: bool,
}

impl Order {
    pub fn new(nu: ComplexValue) -> Self {
        let negate_applied = nu.re < 0.0 || (nu.re == 0.0 && nu.im < 0.0);
        let mut canonical = if negate_applied { -nu } else { nu };
        let conj_applied = canonical.im < 0.0;
        if conj_applied {
            canonical = canonical.conj();
        }
        // -0.0 components would put arg() on the wrong side of the axis.
        canonical = ComplexValue::new(canonical.re + 0.0, canonical.im + 0.0);
        Self {
            nu,
            canonical_nu: canonical,
            conj_applied,
            negate_applied,
        }
    }

    /// Identity record, used when canonicalization is switched off.
    pub fn identity(nu: ComplexValue) -> Self {
        Self {
            nu,
            canonical_nu: nu,
            conj_applied: false,
            negate_applied: false,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.conj_applied && !self.negate_applied
    }

    /// Maps a zero of `K_{canonical_nu}` to the corresponding zero of `K_nu`.
    pub fn map_zero_back(&self, w: SheetPoint) -> SheetPoint {
        if self.conj_applied {
            w.conj()
        } else {
            w
        }
    }

    pub fn describe(&self) -> String {
        match (self.negate_applied, self.conj_applied) {
            (false, false) => "none".to_string(),
            (true, false) => "nu -> -nu".to_string(),
            (false, true) => "nu -> conj(nu), z -> conj(z)".to_string(),
            (true, true) => "nu -> -conj(nu), z -> conj(z)".to_string(),
        }
    }
}
