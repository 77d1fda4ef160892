//! The combined flow tableau: a flow tableau plus the pushforward phases.
//!
//! Inverting a tableau is the expensive way to switch between the two
//! tracking directions. The combined tableau instead carries the phase
//! exponent of every pushed-forward generator alongside the flow rows and
//! updates them gate by gate, so pullbacks and pushforwards are both
//! available at all times. The defining coherence property is that the
//! stored phases always equal the phases of the inverted flow tableau.

use crate::pauli::PauliVec;
use crate::tableau::{Gate, Tableau, TableauKind};

/// A logical generator of the tracked register (qubit index is 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X(usize),
    Z(usize),
}

/// Flow tableau together with the Z4 pushforward-phase vector.
///
/// `push_phase[X(j)]` is the phase exponent of the pushforward of the j-th
/// logical X generator through the tracked circuit, `push_phase[Z(j)]`
/// likewise; stored by generator, rendered in the header convention of the
/// label diagrams (Z-phases first, then X-phases).
#[derive(Clone, PartialEq, Eq)]
pub struct CombinedTableau {
    flow: Tableau,
    // index 0..n are the X generators, n..2n the Z generators
    push_phases: Vec<u8>,
}

impl CombinedTableau {
    pub fn new(n: usize) -> Self {
        CombinedTableau {
            flow: Tableau::identity(n, TableauKind::Flow),
            push_phases: vec![0; 2 * n],
        }
    }

    pub fn n(&self) -> usize {
        self.flow.n()
    }

    pub fn flow(&self) -> &Tableau {
        &self.flow
    }

    pub fn push_phase(&self, g: Generator) -> u8 {
        self.push_phases[self.slot(g)]
    }

    fn slot(&self, g: Generator) -> usize {
        match g {
            Generator::X(j) => j,
            Generator::Z(j) => self.n() + j,
        }
    }

    /// Appends a gate: the flow rows get the usual row operations and the
    /// pushforward phases get their own correction, computed from the rows
    /// before the flow update.
    pub fn apply_gate(&mut self, gate: Gate) {
        assert!(
            gate.validate(self.n()),
            "gate {gate:?} out of range for n={}",
            self.n()
        );
        for prim in gate.primitives() {
            self.apply_primitive(prim);
        }
    }

    fn apply_primitive(&mut self, gate: Gate) {
        let n = self.n();
        match gate {
            Gate::H(t) => {
                // phase corrections from the pre-swap rows t and t-hat
                let xr = self.flow.x_row(t).clone();
                let zr = self.flow.z_row(t).clone();
                for j in 0..n {
                    if xr.zeta().get(j) && zr.zeta().get(j) {
                        self.push_phases[j] = (self.push_phases[j] + 2) & 3;
                    }
                    if xr.xi().get(j) && zr.xi().get(j) {
                        self.push_phases[n + j] = (self.push_phases[n + j] + 2) & 3;
                    }
                }
            }
            Gate::S(t) => {
                // row t-hat is not touched by S, so order does not matter
                let zr = self.flow.z_row(t).clone();
                for j in 0..n {
                    if zr.zeta().get(j) {
                        self.push_phases[j] = (self.push_phases[j] + 1) & 3;
                    }
                    if zr.xi().get(j) {
                        self.push_phases[n + j] = (self.push_phases[n + j] + 1) & 3;
                    }
                }
            }
            Gate::Cnot { .. } => {}
            _ => unreachable!("non-primitive gate"),
        }
        self.flow.apply_gate(gate);
    }

    /// Pushforward of a single logical generator, read off column-wise from
    /// the flow rows: the result equals the corresponding row of the
    /// inverted flow tableau without computing the inverse.
    pub fn read_pushforward_generator(&self, g: Generator) -> PauliVec {
        let n = self.n();
        let kappa = self.push_phase(g);
        let mut xi = crate::bits::Bits::zeros(n);
        let mut zeta = crate::bits::Bits::zeros(n);
        match g {
            Generator::X(j) => {
                // x_k from zeta of the Z_k row, z_k from zeta of the X_k row
                for k in 0..n {
                    xi.set(k, self.flow.z_row(k).zeta().get(j));
                    zeta.set(k, self.flow.x_row(k).zeta().get(j));
                }
            }
            Generator::Z(j) => {
                for k in 0..n {
                    xi.set(k, self.flow.z_row(k).xi().get(j));
                    zeta.set(k, self.flow.x_row(k).xi().get(j));
                }
            }
        }
        PauliVec::new(n, kappa, xi, zeta)
    }

    /// Pushforward of an arbitrary logical operator: the star-fold of the
    /// generator pushforwards in standard-form order (phase, X generators
    /// ascending, Z generators ascending).
    pub fn pushforward_general(&self, p: &PauliVec) -> PauliVec {
        assert_eq!(p.n(), self.n(), "dimension mismatch in pushforward");
        let mut acc = PauliVec::phase_only(self.n(), p.kappa());
        for j in p.xi().iter_ones() {
            acc.star_assign(&self.read_pushforward_generator(Generator::X(j)));
        }
        for j in p.zeta().iter_ones() {
            acc.star_assign(&self.read_pushforward_generator(Generator::Z(j)));
        }
        acc
    }

    /// Renders the Clifford-phase header `(p1..pn|q1..qn)` in the diagram
    /// convention: the first half shows the pushforward phases of the Z
    /// generators, the second half those of the X generators. Tokens are
    /// `+`, `-`, `i`, `i^3` (never `-i`); a space separates a token from a
    /// preceding `i`-token.
    pub fn render_phase_header(&self) -> String {
        let n = self.n();
        let token = |kappa: u8| match kappa & 3 {
            0 => "+",
            1 => "i",
            2 => "-",
            _ => "i^3",
        };
        let join = |phases: &mut dyn Iterator<Item = u8>| {
            let mut out = String::new();
            let mut prev_was_i = false;
            for k in phases {
                let t = token(k);
                if prev_was_i {
                    out.push(' ');
                }
                out.push_str(t);
                prev_was_i = t.starts_with('i');
            }
            out
        };
        let z_half = join(&mut (0..n).map(|j| self.push_phase(Generator::Z(j))));
        let x_half = join(&mut (0..n).map(|j| self.push_phase(Generator::X(j))));
        format!("({z_half}|{x_half})")
    }

    /// JSON dump: the flow tableau dump extended with the pushforward
    /// phases, ordered X generators first, then Z generators.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.flow.to_json();
        v.as_object_mut().unwrap().insert(
            "push_phases".to_string(),
            serde_json::json!(self.push_phases),
        );
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CombinedTableau, crate::Error> {
        let bad = |msg: &str| crate::Error::parse(0, 0, format!("combined json: {msg}"));
        let flow = Tableau::from_json(v)?;
        let phases = v
            .get("push_phases")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing push_phases"))?;
        if phases.len() != 2 * flow.n() {
            return Err(bad("wrong push_phases length"));
        }
        let mut push_phases = Vec::with_capacity(phases.len());
        for p in phases {
            let k = p.as_u64().filter(|&k| k < 4).ok_or_else(|| bad("bad phase"))?;
            push_phases.push(k as u8);
        }
        Ok(CombinedTableau { flow, push_phases })
    }
}

impl std::fmt::Debug for CombinedTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "cp {}", self.render_phase_header())?;
        write!(f, "{}", self.flow)
    }
}
