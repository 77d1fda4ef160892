//! Exact presentation of Pauli operators as (kappa | xi | zeta) over Z4 x F2^n x F2^n.
//!
//! An n-qubit Pauli operator is written uniquely in the XZ standard form
//! `i^kappa * X^xi * Z^zeta` with all X factors left of all Z factors. The
//! triple of exponents is the value tracked everywhere in this crate; the
//! group product becomes the `star` operation below, whose only non-linear
//! part is a 2*(zeta1 . xi2) phase correction for the XZ swaps needed to
//! restore standard form.

use crate::bits::Bits;

/// Presentation (kappa | xi | zeta) of an n-qubit Pauli operator.
///
/// `kappa` is the phase exponent in Z4, `xi` the X-exponents and `zeta` the
/// Z-exponents. Equality of presentations is equality of operators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliVec {
    n: usize,
    kappa: u8,
    xi: Bits,
    zeta: Bits,
}

impl std::fmt::Debug for PauliVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}|{}|{})",
            self.kappa,
            self.xi.to_bitstring(),
            self.zeta.to_bitstring()
        )
    }
}

impl PauliVec {
    /// The identity presentation (0|0|0).
    pub fn identity(n: usize) -> Self {
        PauliVec {
            n,
            kappa: 0,
            xi: Bits::zeros(n),
            zeta: Bits::zeros(n),
        }
    }

    pub fn new(n: usize, kappa: u8, xi: Bits, zeta: Bits) -> Self {
        assert_eq!(xi.len(), n, "xi length must equal n");
        assert_eq!(zeta.len(), n, "zeta length must equal n");
        PauliVec {
            n,
            kappa: kappa & 3,
            xi,
            zeta,
        }
    }

    /// i^kappa * I, a phase-only element (the centralizer of the group).
    pub fn phase_only(n: usize, kappa: u8) -> Self {
        let mut p = PauliVec::identity(n);
        p.kappa = kappa & 3;
        p
    }

    /// X on qubit `q` (0-based).
    pub fn x(n: usize, q: usize) -> Self {
        assert!(q < n);
        PauliVec::new(n, 0, Bits::unit(n, q), Bits::zeros(n))
    }

    /// Z on qubit `q` (0-based).
    pub fn z(n: usize, q: usize) -> Self {
        assert!(q < n);
        PauliVec::new(n, 0, Bits::zeros(n), Bits::unit(n, q))
    }

    /// Y on qubit `q` (0-based): i X Z.
    pub fn y(n: usize, q: usize) -> Self {
        assert!(q < n);
        PauliVec::new(n, 1, Bits::unit(n, q), Bits::unit(n, q))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    pub fn xi(&self) -> &Bits {
        &self.xi
    }

    pub fn zeta(&self) -> &Bits {
        &self.zeta
    }

    pub fn set_kappa(&mut self, kappa: u8) {
        self.kappa = kappa & 3;
    }

    /// Adds `delta` to the phase exponent mod 4.
    pub fn add_phase(&mut self, delta: u8) {
        self.kappa = (self.kappa + delta) & 3;
    }

    pub fn is_identity(&self) -> bool {
        self.kappa == 0 && self.is_phaseless_identity()
    }

    /// True iff xi = zeta = 0 (the operator is a phase times I).
    pub fn is_phaseless_identity(&self) -> bool {
        self.xi.is_zero() && self.zeta.is_zero()
    }

    /// The group operation: presentation of the operator product self * rhs.
    ///
    /// (k1|xi1|z1) * (k2|xi2|z2) = (k1 + k2 + 2*(z1.xi2) | xi1^xi2 | z1^z2)
    /// with the phase in Z4; the correction counts the anticommuting swaps
    /// that move the right factor's X part past the left factor's Z part.
    pub fn star(&self, rhs: &PauliVec) -> PauliVec {
        assert_eq!(self.n, rhs.n, "dimension mismatch in star product");
        let mut xi = self.xi.clone();
        xi.xor_assign(&rhs.xi);
        let mut zeta = self.zeta.clone();
        zeta.xor_assign(&rhs.zeta);
        let swap = if self.zeta.dot(&rhs.xi) { 2 } else { 0 };
        PauliVec {
            n: self.n,
            kappa: (self.kappa + rhs.kappa + swap) & 3,
            xi,
            zeta,
        }
    }

    /// In-place variant of [`star`](Self::star): self <- self * rhs.
    pub fn star_assign(&mut self, rhs: &PauliVec) {
        assert_eq!(self.n, rhs.n, "dimension mismatch in star product");
        let swap = if self.zeta.dot(&rhs.xi) { 2 } else { 0 };
        self.kappa = (self.kappa + rhs.kappa + swap) & 3;
        self.xi.xor_assign(&rhs.xi);
        self.zeta.xor_assign(&rhs.zeta);
    }

    /// The inverse element: (-kappa + 2*(zeta.xi) | xi | zeta).
    pub fn star_inverse(&self) -> PauliVec {
        let swap = if self.zeta.dot(&self.xi) { 2 } else { 0 };
        PauliVec {
            n: self.n,
            kappa: (4 - self.kappa + swap) & 3,
            xi: self.xi.clone(),
            zeta: self.zeta.clone(),
        }
    }

    /// Order of the operator in the Pauli group: 1, 2 or 4.
    pub fn order(&self) -> u8 {
        if self.is_identity() {
            1
        } else if ((self.kappa & 1) == 1) ^ self.zeta.dot(&self.xi) {
            4
        } else {
            2
        }
    }

    /// Hermitian and not a phase times the identity.
    pub fn is_proper(&self) -> bool {
        self.order() <= 2 && !self.is_phaseless_identity()
    }

    /// Symplectic inner product: 1 iff the operators anticommute.
    pub fn symplectic_product(&self, rhs: &PauliVec) -> bool {
        assert_eq!(self.n, rhs.n, "dimension mismatch in symplectic product");
        self.zeta.dot(&rhs.xi) ^ self.xi.dot(&rhs.zeta)
    }

    pub fn commutes_with(&self, rhs: &PauliVec) -> bool {
        !self.symplectic_product(rhs)
    }

    /// Presentation of the ordered product of the given operators.
    ///
    /// Left-fold of [`star`](Self::star); the empty product is the identity.
    pub fn multi_product<'a, I>(n: usize, factors: I) -> PauliVec
    where
        I: IntoIterator<Item = &'a PauliVec>,
    {
        let mut acc = PauliVec::identity(n);
        for p in factors {
            acc.star_assign(p);
        }
        acc
    }

    /// Conversion to the XYZ mapping; defined only for Hermitian operators.
    pub fn to_xyz(&self) -> Result<XyzRep, crate::Error> {
        if self.order() > 2 {
            return Err(crate::Error::NotHermitian);
        }
        let y_count = if self.zeta.dot(&self.xi) { 1u8 } else { 0 };
        // kappa = 2*delta + zeta.xi in Z4, so delta = (kappa - zeta.xi)/2.
        let delta = ((self.kappa + 4 - y_count) & 3) >> 1;
        Ok(XyzRep {
            n: self.n,
            x: self.xi.clone(),
            z: self.zeta.clone(),
            delta: delta == 1,
        })
    }

    /// Drop the phase and compare only (xi|zeta).
    pub fn phaseless_eq(&self, rhs: &PauliVec) -> bool {
        self.xi == rhs.xi && self.zeta == rhs.zeta
    }
}

/// XYZ standard form (-1)^delta * prod of single-qubit I/X/Y/Z factors.
///
/// Only Pauli operators of order at most 2 have this form; it is the
/// representation used by the classic stabilizer-tableau literature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyzRep {
    pub n: usize,
    pub x: Bits,
    pub z: Bits,
    pub delta: bool,
}

impl XyzRep {
    /// Back into the XZ presentation: (2*delta + z.x | x | z).
    pub fn to_pauli(&self) -> PauliVec {
        let y_count = if self.z.dot(&self.x) { 1u8 } else { 0 };
        let kappa = ((if self.delta { 2u8 } else { 0 }) + y_count) & 3;
        PauliVec::new(self.n, kappa, self.x.clone(), self.z.clone())
    }
}

pub fn from_xyz(rep: &XyzRep) -> PauliVec {
    rep.to_pauli()
}
