//! Auxiliary qubits, stabilizer marks and rotation checks.
//!
//! An auxiliary qubit enters the circuit in one of the six single-qubit
//! stabilizer states. Its stabilizing generator is marked trivial and the
//! anticommuting one violating; the marks belong to the logical generators
//! and never move. A physical Pauli rotation pulls back through the tracked
//! circuit to a flow label over all qubits; it respects the stabilizers iff
//! the label is free of violating auxiliary indices, and in that case the
//! auxiliary coordinates can be stripped off, with a sign correction of 2
//! per trivially-acting index whose stabilizer has negative sign.

use std::collections::BTreeMap;

use crate::bits::Bits;
use crate::combined::{CombinedTableau, Generator};
use crate::pauli::PauliVec;
use crate::Error;

/// Initialization state of an auxiliary qubit.
///
/// The Y-basis states are normalized at ingest into the X-basis state plus
/// a tracked S gate on that qubit, so checks only ever see the four axis
/// states.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxState {
    Zero,
    One,
    Plus,
    Minus,
    PlusI,
    MinusI,
}

impl AuxState {
    /// The axis state actually stored plus whether an S gate is tracked.
    pub fn normalized(self) -> (AuxState, bool) {
        match self {
            AuxState::PlusI => (AuxState::Plus, true),
            AuxState::MinusI => (AuxState::Minus, true),
            s => (s, false),
        }
    }

    /// Z basis (|0>, |1>) or X basis (|+>, |->) after normalization.
    fn is_z_basis(self) -> bool {
        matches!(self, AuxState::Zero | AuxState::One)
    }

    /// Whether the stabilizer carries a minus sign (|1> and |->).
    fn is_negative(self) -> bool {
        matches!(self, AuxState::One | AuxState::Minus)
    }

    pub fn parse(token: &str) -> Option<AuxState> {
        Some(match token {
            "0" => AuxState::Zero,
            "1" => AuxState::One,
            "+" => AuxState::Plus,
            "-" => AuxState::Minus,
            "+i" => AuxState::PlusI,
            "-i" => AuxState::MinusI,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AuxState::Zero => "0",
            AuxState::One => "1",
            AuxState::Plus => "+",
            AuxState::Minus => "-",
            AuxState::PlusI => "+i",
            AuxState::MinusI => "-i",
        }
    }
}

/// Declared initialization of one auxiliary qubit (0-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuxSpec {
    pub qubit: usize,
    pub state: AuxState,
}

/// Marks of one auxiliary: which generator is trivial (the stabilizer),
/// which is violating (the destabilizer), and the stabilizer sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuxMark {
    pub qubit: usize,
    pub trivial: Generator,
    pub violating: Generator,
    pub negative: bool,
}

/// The auxiliary qubits of a register: the last `n_total - n_logical`
/// coordinates, each with its normalized initialization state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxRegistry {
    n_total: usize,
    n_logical: usize,
    states: BTreeMap<usize, AuxState>,
}

impl AuxRegistry {
    pub fn new(n_total: usize, n_logical: usize) -> Self {
        assert!(n_logical <= n_total);
        AuxRegistry {
            n_total,
            n_logical,
            states: BTreeMap::new(),
        }
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    pub fn n_logical(&self) -> usize {
        self.n_logical
    }

    pub fn is_aux(&self, qubit: usize) -> bool {
        self.states.contains_key(&qubit)
    }

    /// Normalized state of an initialized auxiliary.
    pub fn state(&self, qubit: usize) -> Option<AuxState> {
        self.states.get(&qubit).copied()
    }

    pub fn aux_qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.states.keys().copied()
    }

    pub fn mark(&self, qubit: usize) -> Option<AuxMark> {
        let state = self.state(qubit)?;
        Some(if state.is_z_basis() {
            AuxMark {
                qubit,
                trivial: Generator::Z(qubit),
                violating: Generator::X(qubit),
                negative: state.is_negative(),
            }
        } else {
            AuxMark {
                qubit,
                trivial: Generator::X(qubit),
                violating: Generator::Z(qubit),
                negative: state.is_negative(),
            }
        })
    }

    /// The signed stabilizer generator at time 0, e.g. -Z_a for a |1> aux.
    pub fn stabilizer(&self, qubit: usize) -> Option<PauliVec> {
        let state = self.state(qubit)?;
        let kappa = if state.is_negative() { 2 } else { 0 };
        Some(if state.is_z_basis() {
            PauliVec::new(
                self.n_total,
                kappa,
                Bits::zeros(self.n_total),
                Bits::unit(self.n_total, qubit),
            )
        } else {
            PauliVec::new(
                self.n_total,
                kappa,
                Bits::unit(self.n_total, qubit),
                Bits::zeros(self.n_total),
            )
        })
    }
}

/// Registers an auxiliary initialization. Y-basis states are stored as the
/// corresponding X-basis state and an S gate is tracked on that qubit; the
/// remaining states track no gates, their signs live in the marks and in
/// the phase correction of [`check_rotation`].
pub fn init_aux(
    ct: &mut CombinedTableau,
    registry: &mut AuxRegistry,
    spec: AuxSpec,
) -> Result<(), Error> {
    assert_eq!(ct.n(), registry.n_total(), "tableau/registry size mismatch");
    assert!(
        spec.qubit >= registry.n_logical() && spec.qubit < registry.n_total(),
        "auxiliary qubit {} outside the auxiliary range",
        spec.qubit
    );
    if registry.is_aux(spec.qubit) {
        return Err(Error::ReInitialization(spec.qubit));
    }
    let (state, apply_s) = spec.state.normalized();
    registry.states.insert(spec.qubit, state);
    if apply_s {
        ct.apply_gate(crate::tableau::Gate::S(spec.qubit));
    }
    Ok(())
}

/// Outcome of checking one untracked Pauli rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationReport {
    /// Pullback of the rotation axis over all qubits, marks retained.
    pub raw_label: PauliVec,
    pub allowed: bool,
    /// The aux-stripped logical operator, present iff allowed.
    pub logical: Option<PauliVec>,
    /// Auxiliaries whose stabilizer the rotation violates.
    pub violating_auxes: Vec<usize>,
}

/// Pulls the rotation axis back through the tracked circuit, decides
/// whether it respects every auxiliary stabilizer and, if so, strips the
/// auxiliary coordinates with the sign correction for negative stabilizers.
pub fn check_rotation(
    ct: &CombinedTableau,
    registry: &AuxRegistry,
    p: &PauliVec,
) -> RotationReport {
    assert_eq!(p.n(), registry.n_total(), "dimension mismatch in check_rotation");
    let raw = ct.flow().pullback(p);
    let mut violating = Vec::new();
    for (&a, &state) in &registry.states {
        let hit = if state.is_z_basis() {
            raw.xi().get(a)
        } else {
            raw.zeta().get(a)
        };
        if hit {
            violating.push(a);
        }
    }
    if !violating.is_empty() {
        return RotationReport {
            raw_label: raw,
            allowed: false,
            logical: None,
            violating_auxes: violating,
        };
    }
    let n1 = registry.n_logical();
    let mut kappa = raw.kappa();
    for (&a, &state) in &registry.states {
        let negative_hit = match state {
            AuxState::One => raw.zeta().get(a),
            AuxState::Minus => raw.xi().get(a),
            _ => false,
        };
        if negative_hit {
            kappa = (kappa + 2) & 3;
        }
    }
    let logical = PauliVec::new(n1, kappa, raw.xi().truncated(n1), raw.zeta().truncated(n1));
    RotationReport {
        raw_label: raw,
        allowed: true,
        logical: Some(logical),
        violating_auxes: Vec::new(),
    }
}

/// Phaseless version of the allowed-verdict: XOR-folds only the violating
/// coordinates of the rows selected by the rotation axis.
pub fn fast_violation_check(
    ct: &CombinedTableau,
    registry: &AuxRegistry,
    p: &PauliVec,
) -> bool {
    assert_eq!(p.n(), registry.n_total(), "dimension mismatch");
    let n = registry.n_total();
    // violating coordinate masks: xi for Z-basis auxes, zeta for X-basis
    let mut mask_xi = Bits::zeros(n);
    let mut mask_zeta = Bits::zeros(n);
    for (&a, &state) in &registry.states {
        if state.is_z_basis() {
            mask_xi.set(a, true);
        } else {
            mask_zeta.set(a, true);
        }
    }
    let mut acc_xi = Bits::zeros(n);
    let mut acc_zeta = Bits::zeros(n);
    let flow = ct.flow();
    for j in p.xi().iter_ones() {
        acc_xi.xor_assign(&flow.x_row(j).xi().and(&mask_xi));
        acc_zeta.xor_assign(&flow.x_row(j).zeta().and(&mask_zeta));
    }
    for j in p.zeta().iter_ones() {
        acc_xi.xor_assign(&flow.z_row(j).xi().and(&mask_xi));
        acc_zeta.xor_assign(&flow.z_row(j).zeta().and(&mask_zeta));
    }
    acc_xi.is_zero() && acc_zeta.is_zero()
}

/// Commutation check between a time-0 operator and a current-time physical
/// operator, evaluated as the bilinear sum over the flow entries at the
/// rows selected by the physical operator and the columns selected by the
/// X/Z-swapped time-0 operator. Returns true iff they commute.
pub fn stabilizer_commutes(ct: &CombinedTableau, stab: &PauliVec, q: &PauliVec) -> bool {
    assert_eq!(stab.n(), ct.n(), "dimension mismatch in stabilizer check");
    assert_eq!(q.n(), ct.n(), "dimension mismatch in stabilizer check");
    let flow = ct.flow();
    let mut acc = false;
    for j in q.xi().iter_ones() {
        let r = flow.x_row(j);
        acc ^= r.xi().dot(stab.zeta()) ^ r.zeta().dot(stab.xi());
    }
    for j in q.zeta().iter_ones() {
        let r = flow.z_row(j);
        acc ^= r.xi().dot(stab.zeta()) ^ r.zeta().dot(stab.xi());
    }
    !acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Gate;

    fn pv(kappa: u8, xi: &str, zeta: &str) -> PauliVec {
        PauliVec::new(
            xi.len(),
            kappa,
            Bits::from_bitstring(xi).unwrap(),
            Bits::from_bitstring(zeta).unwrap(),
        )
    }

    /// The three-qubit encoding circuit with a |+> auxiliary: S on the aux,
    /// then CNOT(1->2), CNOT(a->1), CNOT(2->a).
    fn aux_encoding() -> (CombinedTableau, AuxRegistry) {
        let mut ct = CombinedTableau::new(3);
        let mut reg = AuxRegistry::new(3, 2);
        init_aux(&mut ct, &mut reg, AuxSpec { qubit: 2, state: AuxState::Plus }).unwrap();
        ct.apply_gate(Gate::S(2));
        ct.apply_gate(Gate::Cnot { control: 0, target: 1 });
        ct.apply_gate(Gate::Cnot { control: 2, target: 0 });
        ct.apply_gate(Gate::Cnot { control: 1, target: 2 });
        (ct, reg)
    }

    #[test]
    fn plus_aux_y_rotation_allowed() {
        let (ct, reg) = aux_encoding();
        let report = check_rotation(&ct, &reg, &PauliVec::y(3, 2));
        assert_eq!(report.raw_label, pv(0, "111", "110"));
        assert!(report.allowed);
        assert_eq!(report.logical.unwrap(), pv(0, "11", "11"));
        assert!(report.violating_auxes.is_empty());
    }

    #[test]
    fn plus_aux_after_s_x_is_violating() {
        // a |+> auxiliary followed by S: the X label is i^3 <a.> a!, which
        // contains the violating Z index of an X-basis auxiliary
        let mut ct = CombinedTableau::new(1);
        let mut reg = AuxRegistry::new(1, 0);
        init_aux(&mut ct, &mut reg, AuxSpec { qubit: 0, state: AuxState::Plus }).unwrap();
        ct.apply_gate(Gate::S(0));
        let report = check_rotation(&ct, &reg, &PauliVec::x(1, 0));
        assert_eq!(report.raw_label, pv(3, "1", "1"));
        assert!(!report.allowed);
        assert_eq!(report.violating_auxes, vec![0]);
        assert!(report.logical.is_none());
    }

    #[test]
    fn one_aux_z_rotation_gives_minus_identity() {
        // Z on a |1> auxiliary acts as -I on the logical subspace
        let mut ct = CombinedTableau::new(1);
        let mut reg = AuxRegistry::new(1, 0);
        init_aux(&mut ct, &mut reg, AuxSpec { qubit: 0, state: AuxState::One }).unwrap();
        let report = check_rotation(&ct, &reg, &PauliVec::z(1, 0));
        assert_eq!(report.raw_label, pv(0, "0", "1"));
        assert!(report.allowed);
        assert_eq!(report.logical.unwrap(), PauliVec::phase_only(0, 2));
    }

    #[test]
    fn minus_i_aux_y_rotation_gives_minus_identity() {
        // |-i> is stored as |-> plus a tracked S; Y acts as -I on it
        let mut ct = CombinedTableau::new(1);
        let mut reg = AuxRegistry::new(1, 0);
        init_aux(&mut ct, &mut reg, AuxSpec { qubit: 0, state: AuxState::MinusI }).unwrap();
        assert_eq!(reg.state(0), Some(AuxState::Minus));
        let report = check_rotation(&ct, &reg, &PauliVec::y(1, 0));
        assert!(report.allowed);
        assert_eq!(report.logical.unwrap(), PauliVec::phase_only(0, 2));
    }

    #[test]
    fn zero_aux_marks_only() {
        let mut ct = CombinedTableau::new(2);
        let mut reg = AuxRegistry::new(2, 1);
        init_aux(&mut ct, &mut reg, AuxSpec { qubit: 1, state: AuxState::Zero }).unwrap();
        assert_eq!(ct, CombinedTableau::new(2));
        let mark = reg.mark(1).unwrap();
        assert_eq!(mark.trivial, Generator::Z(1));
        assert_eq!(mark.violating, Generator::X(1));
        assert!(!mark.negative);
        assert_eq!(reg.stabilizer(1).unwrap(), pv(0, "00", "01"));
    }

    #[test]
    fn reinitialization_is_an_error() {
        let mut ct = CombinedTableau::new(1);
        let mut reg = AuxRegistry::new(1, 0);
        init_aux(&mut ct, &mut reg, AuxSpec { qubit: 0, state: AuxState::Zero }).unwrap();
        let err = init_aux(&mut ct, &mut reg, AuxSpec { qubit: 0, state: AuxState::Plus });
        assert_eq!(err, Err(Error::ReInitialization(0)));
    }

    #[test]
    fn fast_check_agrees_with_full_check() {
        let (ct, reg) = aux_encoding();
        for kappa in [0u8, 1] {
            for xi in 0..8u8 {
                for zeta in 0..8u8 {
                    let p = PauliVec::new(
                        3,
                        kappa,
                        Bits::from_bools((0..3).map(|i| xi >> i & 1 == 1)),
                        Bits::from_bools((0..3).map(|i| zeta >> i & 1 == 1)),
                    );
                    assert_eq!(
                        fast_violation_check(&ct, &reg, &p),
                        check_rotation(&ct, &reg, &p).allowed,
                        "mismatch at {p:?}"
                    );
                }
            }
        }
        // no auxes -> always allowed
        let free = AuxRegistry::new(3, 3);
        assert!(fast_violation_check(&ct, &free, &PauliVec::x(3, 2)));
        // identity -> allowed
        assert!(fast_violation_check(&ct, &reg, &PauliVec::identity(3)));
    }

    #[test]
    fn stabilizer_commutation_triple_equivalence() {
        let (ct, reg) = aux_encoding();
        let stab = reg.stabilizer(2).unwrap();
        // the pushed-forward stabilizer commutes with the physical Y on the aux
        assert!(stabilizer_commutes(&ct, &stab, &PauliVec::y(3, 2)));
        // the pushforward has support X1 Z2 Y_a
        let pushed = ct.pushforward_general(&stab);
        assert!(pushed.phaseless_eq(&pv(0, "101", "011")));
        // identity stabilizer commutes with everything
        let id = PauliVec::identity(3);
        assert!(stabilizer_commutes(&ct, &id, &PauliVec::x(3, 0)));
        // bilinear sum = pullback-side = pushforward-side, all Paulis
        for xi in 0..8u8 {
            for zeta in 0..8u8 {
                let q = PauliVec::new(
                    3,
                    0,
                    Bits::from_bools((0..3).map(|i| xi >> i & 1 == 1)),
                    Bits::from_bools((0..3).map(|i| zeta >> i & 1 == 1)),
                );
                let bilinear = stabilizer_commutes(&ct, &stab, &q);
                let via_pullback = !ct.flow().pullback(&q).symplectic_product(&stab);
                let via_pushforward = !q.symplectic_product(&ct.pushforward_general(&stab));
                assert_eq!(bilinear, via_pullback);
                assert_eq!(bilinear, via_pushforward);
            }
        }
    }

    #[test]
    fn violating_rotation_anticommutes_with_pushed_stabilizer() {
        let (ct, reg) = aux_encoding();
        // physical Z on the aux hits the violating index
        let p = PauliVec::z(3, 2);
        let report = check_rotation(&ct, &reg, &p);
        assert!(!report.allowed);
        let stab = reg.stabilizer(2).unwrap();
        assert!(!stabilizer_commutes(&ct, &stab, &p));
    }
}
