//! Flow and Clifford tableaus.
//!
//! A tableau is a (2n+1)-row matrix of presentations: row 0 is the fixed
//! image of iI, rows 1..n the images of the X generators and rows n+1..2n
//! the images of the Z generators. A flow tableau holds pullbacks C!X C
//! (physical to logical), a Clifford tableau holds pushforwards C X C!
//! (logical to physical); the two are inverses of each other.
//!
//! Appending a gate is a row operation on the flow tableau and a column
//! operation on the Clifford tableau; both are implemented here together
//! with the fold product, composition, inversion and the properness checks.

use crate::bits::Bits;
use crate::pauli::PauliVec;
use crate::Error;

/// Whether a tableau tracks pullbacks (Flow) or pushforwards (Clifford).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    Flow,
    Clifford,
}

impl TableauKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableauKind::Flow => "flow",
            TableauKind::Clifford => "clifford",
        }
    }
}

/// Elementary tracked gates. Pauli gates and S-dagger are realized as
/// compositions over {H, S, CNOT} when applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    /// Checks qubit indices against the register size.
    pub fn validate(&self, n: usize) -> bool {
        match *self {
            Gate::H(t) | Gate::S(t) | Gate::Sdg(t) | Gate::X(t) | Gate::Y(t) | Gate::Z(t) => t < n,
            Gate::Cnot { control, target } => control < n && target < n && control != target,
        }
    }

    /// Decomposition into the primitive set {H, S, CNOT}.
    pub(crate) fn primitives(&self) -> Vec<Gate> {
        match *self {
            Gate::H(_) | Gate::S(_) | Gate::Cnot { .. } => vec![*self],
            Gate::Sdg(t) => vec![Gate::S(t); 3],
            Gate::Z(t) => vec![Gate::S(t); 2],
            Gate::X(t) => vec![Gate::H(t), Gate::S(t), Gate::S(t), Gate::H(t)],
            Gate::Y(t) => vec![
                Gate::S(t),
                Gate::S(t),
                Gate::H(t),
                Gate::S(t),
                Gate::S(t),
                Gate::H(t),
            ],
        }
    }
}

/// A (2n+1)-row matrix of presentations, proper by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Tableau {
    n: usize,
    kind: TableauKind,
    rows: Vec<PauliVec>,
}

impl Tableau {
    /// The identity tableau: row j is the trivial encoding of generator j.
    pub fn identity(n: usize, kind: TableauKind) -> Self {
        let mut rows = Vec::with_capacity(2 * n + 1);
        rows.push(PauliVec::phase_only(n, 1));
        for j in 0..n {
            rows.push(PauliVec::x(n, j));
        }
        for j in 0..n {
            rows.push(PauliVec::z(n, j));
        }
        Tableau { n, kind, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn row(&self, i: usize) -> &PauliVec {
        &self.rows[i]
    }

    /// Image row of the X generator on qubit `j` (0-based).
    pub fn x_row(&self, j: usize) -> &PauliVec {
        &self.rows[1 + j]
    }

    /// Image row of the Z generator on qubit `j` (0-based).
    pub fn z_row(&self, j: usize) -> &PauliVec {
        &self.rows[1 + self.n + j]
    }

    /// Appends a gate. Row operations for a flow tableau, column operations
    /// for a Clifford tableau; non-primitive gates expand over {H, S, CNOT}.
    pub fn apply_gate(&mut self, gate: Gate) {
        assert!(gate.validate(self.n), "gate {gate:?} out of range for n={}", self.n);
        for prim in gate.primitives() {
            match self.kind {
                TableauKind::Flow => self.apply_primitive_flow(prim),
                TableauKind::Clifford => self.apply_primitive_clifford(prim),
            }
        }
    }

    fn apply_primitive_flow(&mut self, gate: Gate) {
        let n = self.n;
        match gate {
            Gate::H(t) => self.rows.swap(1 + t, 1 + n + t),
            Gate::S(t) => {
                // row_t <- 3 * row_t * row_that
                let zrow = self.rows[1 + n + t].clone();
                let xrow = &mut self.rows[1 + t];
                xrow.add_phase(3);
                xrow.star_assign(&zrow);
            }
            Gate::Cnot { control: c, target: t } => {
                // X half: row_c <- row_c * row_t; Z half: row_that <- row_that * row_chat
                let xt = self.rows[1 + t].clone();
                self.rows[1 + c].star_assign(&xt);
                let zc = self.rows[1 + n + c].clone();
                self.rows[1 + n + t].star_assign(&zc);
            }
            _ => unreachable!("non-primitive gate"),
        }
    }

    fn apply_primitive_clifford(&mut self, gate: Gate) {
        match gate {
            Gate::H(t) => {
                for row in &mut self.rows[1..] {
                    let a = row.xi().get(t);
                    let b = row.zeta().get(t);
                    if a && b {
                        row.add_phase(2);
                    }
                    if a != b {
                        let mut xi = row.xi().clone();
                        let mut zeta = row.zeta().clone();
                        xi.set(t, b);
                        zeta.set(t, a);
                        *row = PauliVec::new(row.n(), row.kappa(), xi, zeta);
                    }
                }
            }
            Gate::S(t) => {
                for row in &mut self.rows[1..] {
                    if row.xi().get(t) {
                        row.add_phase(1);
                        let mut zeta = row.zeta().clone();
                        zeta.flip(t);
                        *row = PauliVec::new(row.n(), row.kappa(), row.xi().clone(), zeta);
                    }
                }
            }
            Gate::Cnot { control: c, target: t } => {
                for row in &mut self.rows[1..] {
                    let mut xi = row.xi().clone();
                    let mut zeta = row.zeta().clone();
                    if xi.get(c) {
                        xi.flip(t);
                    }
                    if zeta.get(t) {
                        zeta.flip(c);
                    }
                    *row = PauliVec::new(row.n(), row.kappa(), xi, zeta);
                }
            }
            _ => unreachable!("non-primitive gate"),
        }
    }

    /// The fold product p * M: phase row to the power kappa, then the X rows
    /// selected by xi ascending, then the Z rows selected by zeta ascending.
    fn fold(&self, p: &PauliVec) -> PauliVec {
        assert_eq!(p.n(), self.n, "dimension mismatch in tableau fold");
        let mut acc = PauliVec::phase_only(self.n, p.kappa());
        for j in p.xi().iter_ones() {
            acc.star_assign(self.x_row(j));
        }
        for j in p.zeta().iter_ones() {
            acc.star_assign(self.z_row(j));
        }
        acc
    }

    /// Pullback of a physical operator through the tracked circuit.
    pub fn pullback(&self, p: &PauliVec) -> PauliVec {
        assert_eq!(self.kind, TableauKind::Flow, "pullback needs a flow tableau");
        self.fold(p)
    }

    /// Pushforward of a logical operator through the tracked circuit.
    pub fn pushforward(&self, p: &PauliVec) -> PauliVec {
        assert_eq!(
            self.kind,
            TableauKind::Clifford,
            "pushforward needs a Clifford tableau"
        );
        self.fold(p)
    }

    /// Tableau of the concatenated circuit, `outer` applied after `inner`.
    ///
    /// Flow kind folds the rows of the outer tableau through the inner one;
    /// Clifford kind folds the rows of the inner tableau through the outer.
    pub fn compose(outer: &Tableau, inner: &Tableau) -> Tableau {
        assert_eq!(outer.n, inner.n, "dimension mismatch in compose");
        assert_eq!(outer.kind, inner.kind, "kind mismatch in compose");
        let (row_source, fold_through) = match outer.kind {
            TableauKind::Flow => (outer, inner),
            TableauKind::Clifford => (inner, outer),
        };
        let rows = row_source
            .rows
            .iter()
            .map(|r| fold_through.fold(r))
            .collect();
        Tableau {
            n: outer.n,
            kind: outer.kind,
            rows,
        }
    }

    /// The inverse tableau: flow of the inverse circuit, i.e. the Clifford
    /// tableau of the tracked circuit (and vice versa).
    ///
    /// The phaseless block (A B; C D) maps to (D^T B^T; C^T A^T); the new
    /// phases are -F'e + 2s with s the diagonal of F' strup(M) F'^T, where
    /// M[i][j] = zeta_i . xi_j over the old rows.
    pub fn invert(&self) -> Tableau {
        assert!(self.is_proper(), "invert requires a proper tableau");
        let n = self.n;
        let m = 2 * n;

        // Phaseless inverse: new row bits are columns of the old blocks.
        // New X-row j = (D^T_j | B^T_j): bit k from zeta(old Z-row k)[j] and
        // zeta(old X-row k)[j]; new Z-row j = (C^T_j | A^T_j) likewise on xi.
        let mut new_bits: Vec<Bits> = Vec::with_capacity(m);
        for j in 0..n {
            let mut v = Bits::zeros(m);
            for k in 0..n {
                v.set(k, self.z_row(k).zeta().get(j));
                v.set(n + k, self.x_row(k).zeta().get(j));
            }
            new_bits.push(v);
        }
        for j in 0..n {
            let mut v = Bits::zeros(m);
            for k in 0..n {
                v.set(k, self.z_row(k).xi().get(j));
                v.set(n + k, self.x_row(k).xi().get(j));
            }
            new_bits.push(v);
        }

        // strup(M) with M[i][j] = zeta_i . xi_j over old rows (0-based here).
        let mut strup: Vec<Bits> = Vec::with_capacity(m);
        for i in 0..m {
            let zi = &self.rows[1 + i];
            let mut row = Bits::zeros(m);
            for j in (i + 1)..m {
                if zi.zeta().dot(self.rows[1 + j].xi()) {
                    row.set(j, true);
                }
            }
            strup.push(row);
        }

        let mut rows = Vec::with_capacity(m + 1);
        rows.push(PauliVec::phase_only(n, 1));
        for v in &new_bits {
            // s_k = v . strup(M) . v^T
            let mut s = false;
            for i in v.iter_ones() {
                s ^= strup[i].dot(v);
            }
            // eps' = -(sum of selected old phases) + 2s  (mod 4)
            let mut sum: u8 = 0;
            for i in v.iter_ones() {
                sum = (sum + self.rows[1 + i].kappa()) & 3;
            }
            let kappa = ((4 - sum) + if s { 2 } else { 0 }) & 3;
            let xi = Bits::from_bools((0..n).map(|j| v.get(j)));
            let zeta = Bits::from_bools((0..n).map(|j| v.get(n + j)));
            rows.push(PauliVec::new(n, kappa, xi, zeta));
        }

        Tableau {
            n,
            kind: match self.kind {
                TableauKind::Flow => TableauKind::Clifford,
                TableauKind::Clifford => TableauKind::Flow,
            },
            rows,
        }
    }

    /// Proper tableau check: row 0 fixed, phaseless block symplectic, all
    /// other rows proper presentations.
    pub fn is_proper(&self) -> bool {
        if self.rows[0] != PauliVec::phase_only(self.n, 1) {
            return false;
        }
        let m = 2 * self.n;
        for i in 1..=m {
            if !self.rows[i].is_proper() {
                return false;
            }
        }
        for i in 1..=m {
            for j in i..=m {
                let expected = j == i + self.n;
                if self.rows[i].symplectic_product(&self.rows[j]) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// CNOT-only block law: B = C = 0, all phases zero and A = D^-T.
    pub fn cnot_block_check(&self) -> bool {
        let n = self.n;
        for i in 1..=2 * n {
            if self.rows[i].kappa() != 0 {
                return false;
            }
        }
        for j in 0..n {
            if !self.x_row(j).zeta().is_zero() || !self.z_row(j).xi().is_zero() {
                return false;
            }
        }
        // A = D^-T  <=>  A D^T = I
        for i in 0..n {
            for j in 0..n {
                let dot = self.x_row(i).xi().dot(self.z_row(j).zeta());
                if dot != (i == j) {
                    return false;
                }
            }
        }
        true
    }

    /// JSON dump per the external schema; bit strings have qubit 1 first.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!([
                    r.kappa(),
                    r.xi().to_bitstring(),
                    r.zeta().to_bitstring()
                ])
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "kind": self.kind.as_str(),
            "rows": rows,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Tableau, Error> {
        let bad = |msg: &str| Error::parse(0, 0, format!("tableau json: {msg}"));
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| bad("missing n"))? as usize;
        let kind = match v.get("kind").and_then(|x| x.as_str()) {
            Some("flow") => TableauKind::Flow,
            Some("clifford") => TableauKind::Clifford,
            _ => return Err(bad("kind must be \"flow\" or \"clifford\"")),
        };
        let rows_json = v
            .get("rows")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing rows"))?;
        if rows_json.len() != 2 * n + 1 {
            return Err(bad("wrong number of rows"));
        }
        let mut rows = Vec::with_capacity(2 * n + 1);
        for rj in rows_json {
            let arr = rj.as_array().filter(|a| a.len() == 3).ok_or_else(|| bad("bad row"))?;
            let kappa = arr[0].as_u64().filter(|&k| k < 4).ok_or_else(|| bad("bad kappa"))? as u8;
            let xi = arr[1]
                .as_str()
                .and_then(Bits::from_bitstring)
                .filter(|b| b.len() == n)
                .ok_or_else(|| bad("bad xi bits"))?;
            let zeta = arr[2]
                .as_str()
                .and_then(Bits::from_bitstring)
                .filter(|b| b.len() == n)
                .ok_or_else(|| bad("bad zeta bits"))?;
            rows.push(PauliVec::new(n, kappa, xi, zeta));
        }
        Ok(Tableau { n, kind, rows })
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{} tableau, n={}", self.kind.as_str(), self.n)?;
        writeln!(f, "iI : {:?}", self.rows[0])?;
        for j in 0..self.n {
            writeln!(f, "X{} : {:?}", j + 1, self.x_row(j))?;
        }
        for j in 0..self.n {
            writeln!(f, "Z{} : {:?}", j + 1, self.z_row(j))?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}
