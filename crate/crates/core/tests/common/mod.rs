//! Exact dense-matrix oracle for the test suite.
//!
//! Matrices are stored as Gaussian-integer entries divided by sqrt(2)^scale,
//! so Clifford unitaries, Pauli matrices and the rotations exp(i theta P/2)
//! for theta in {pi/2, pi} are all represented exactly. Nothing here touches
//! floating point, and nothing here shares code with the library's tableau
//! arithmetic.

#![allow(dead_code)]

use parityflow::{Gate, PauliVec};
use rand::rngs::StdRng;
use rand::Rng;

/// A complex integer matrix with an implicit 1/sqrt(2)^scale factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CMat {
    pub dim: usize,
    pub re: Vec<i128>,
    pub im: Vec<i128>,
    pub scale: u32,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat {
            dim,
            re: vec![0; dim * dim],
            im: vec![0; dim * dim],
            scale: 0,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m.re[i * dim + i] = 1;
        }
        m
    }

    fn at(&self, r: usize, c: usize) -> (i128, i128) {
        (self.re[r * self.dim + c], self.im[r * self.dim + c])
    }

    fn set(&mut self, r: usize, c: usize, v: (i128, i128)) {
        self.re[r * self.dim + c] = v.0;
        self.im[r * self.dim + c] = v.1;
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim);
        let d = self.dim;
        let mut out = CMat::zeros(d);
        out.scale = self.scale + rhs.scale;
        for r in 0..d {
            for c in 0..d {
                let mut re = 0i128;
                let mut im = 0i128;
                for k in 0..d {
                    let (ar, ai) = self.at(r, k);
                    let (br, bi) = rhs.at(k, c);
                    re += ar * br - ai * bi;
                    im += ar * bi + ai * br;
                }
                out.set(r, c, (re, im));
            }
        }
        out.reduce();
        out
    }

    pub fn dagger(&self) -> CMat {
        let d = self.dim;
        let mut out = CMat::zeros(d);
        out.scale = self.scale;
        for r in 0..d {
            for c in 0..d {
                let (re, im) = self.at(c, r);
                out.set(r, c, (re, -im));
            }
        }
        out
    }

    pub fn scaled_by_i(&self) -> CMat {
        let mut out = self.clone();
        for k in 0..self.dim * self.dim {
            let (re, im) = (out.re[k], out.im[k]);
            out.re[k] = -im;
            out.im[k] = re;
        }
        out
    }

    pub fn add(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim);
        assert_eq!(self.scale, rhs.scale, "scales must match for addition");
        let mut out = self.clone();
        for k in 0..self.dim * self.dim {
            out.re[k] += rhs.re[k];
            out.im[k] += rhs.im[k];
        }
        out
    }

    pub fn neg(&self) -> CMat {
        let mut out = self.clone();
        for k in 0..self.dim * self.dim {
            out.re[k] = -out.re[k];
            out.im[k] = -out.im[k];
        }
        out
    }

    /// kron(self, rhs): self indexes the more significant qubits.
    pub fn kron(&self, rhs: &CMat) -> CMat {
        let d1 = self.dim;
        let d2 = rhs.dim;
        let mut out = CMat::zeros(d1 * d2);
        out.scale = self.scale + rhs.scale;
        for r1 in 0..d1 {
            for c1 in 0..d1 {
                let (ar, ai) = self.at(r1, c1);
                for r2 in 0..d2 {
                    for c2 in 0..d2 {
                        let (br, bi) = rhs.at(r2, c2);
                        out.set(
                            r1 * d2 + r2,
                            c1 * d2 + c2,
                            (ar * br - ai * bi, ar * bi + ai * br),
                        );
                    }
                }
            }
        }
        out
    }

    /// Strips common factors of 2 to keep the representation canonical.
    pub fn reduce(&mut self) {
        while self.scale >= 2
            && self
                .re
                .iter()
                .chain(self.im.iter())
                .all(|&v| v % 2 == 0)
        {
            for v in self.re.iter_mut().chain(self.im.iter_mut()) {
                *v /= 2;
            }
            self.scale -= 2;
        }
    }

    pub fn reduced(mut self) -> CMat {
        self.reduce();
        self
    }

    /// Exact equality after canonical reduction.
    pub fn equals(&self, rhs: &CMat) -> bool {
        let a = self.clone().reduced();
        let b = rhs.clone().reduced();
        a == b
    }

    /// All entries lie in {0, +-1, +-i}.
    pub fn entries_unimodular(&self) -> bool {
        (0..self.dim * self.dim).all(|k| {
            let (re, im) = (self.re[k], self.im[k]);
            (re == 0 && im.abs() <= 1) || (im == 0 && re.abs() <= 1)
        })
    }
}

/// A complex integer vector with an implicit 1/sqrt(2)^scale factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CVec {
    pub re: Vec<i128>,
    pub im: Vec<i128>,
    pub scale: u32,
}

impl CVec {
    pub fn basis(dim: usize, index: usize) -> CVec {
        let mut v = CVec {
            re: vec![0; dim],
            im: vec![0; dim],
            scale: 0,
        };
        v.re[index] = 1;
        v
    }

    pub fn kron(&self, rhs: &CVec) -> CVec {
        let mut out = CVec {
            re: vec![0; self.re.len() * rhs.re.len()],
            im: vec![0; self.re.len() * rhs.re.len()],
            scale: self.scale + rhs.scale,
        };
        for (i, (&ar, &ai)) in self.re.iter().zip(&self.im).enumerate() {
            for (j, (&br, &bi)) in rhs.re.iter().zip(&rhs.im).enumerate() {
                out.re[i * rhs.re.len() + j] = ar * br - ai * bi;
                out.im[i * rhs.re.len() + j] = ar * bi + ai * br;
            }
        }
        out
    }

    pub fn reduce(&mut self) {
        while self.scale >= 2
            && self
                .re
                .iter()
                .chain(self.im.iter())
                .all(|&v| v % 2 == 0)
        {
            for v in self.re.iter_mut().chain(self.im.iter_mut()) {
                *v /= 2;
            }
            self.scale -= 2;
        }
    }

    pub fn equals(&self, rhs: &CVec) -> bool {
        let mut a = self.clone();
        let mut b = rhs.clone();
        a.reduce();
        b.reduce();
        a == b
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().all(|&v| v == 0) && self.im.iter().all(|&v| v == 0)
    }
}

pub fn apply(m: &CMat, v: &CVec) -> CVec {
    assert_eq!(m.dim, v.re.len());
    let d = m.dim;
    let mut out = CVec {
        re: vec![0; d],
        im: vec![0; d],
        scale: m.scale + v.scale,
    };
    for r in 0..d {
        let mut re = 0i128;
        let mut im = 0i128;
        for c in 0..d {
            let (ar, ai) = m.at(r, c);
            let (br, bi) = (v.re[c], v.im[c]);
            re += ar * br - ai * bi;
            im += ar * bi + ai * br;
        }
        out.re[r] = re;
        out.im[r] = im;
    }
    out
}

fn single(re: [[i128; 2]; 2], im: [[i128; 2]; 2], scale: u32) -> CMat {
    let mut m = CMat::zeros(2);
    m.scale = scale;
    for r in 0..2 {
        for c in 0..2 {
            m.set(r, c, (re[r][c], im[r][c]));
        }
    }
    m
}

pub fn mat_i() -> CMat {
    CMat::identity(2)
}

pub fn mat_x() -> CMat {
    single([[0, 1], [1, 0]], [[0, 0], [0, 0]], 0)
}

pub fn mat_y() -> CMat {
    single([[0, 0], [0, 0]], [[0, -1], [1, 0]], 0)
}

pub fn mat_z() -> CMat {
    single([[1, 0], [0, -1]], [[0, 0], [0, 0]], 0)
}

fn mat_xz() -> CMat {
    // X Z = [[0,-1],[1,0]]
    single([[0, -1], [1, 0]], [[0, 0], [0, 0]], 0)
}

fn mat_h() -> CMat {
    single([[1, 1], [1, -1]], [[0, 0], [0, 0]], 1)
}

fn mat_s() -> CMat {
    single([[1, 0], [0, 0]], [[0, 0], [0, 1]], 0)
}

fn mat_sdg() -> CMat {
    single([[1, 0], [0, 0]], [[0, 0], [0, -1]], 0)
}

/// Dense matrix of a presentation: i^kappa * kron of X^xi Z^zeta factors,
/// qubit 0 as the most significant tensor factor.
pub fn pauli_matrix(p: &PauliVec) -> CMat {
    let mut m = CMat::identity(1);
    for q in 0..p.n() {
        let f = match (p.xi().get(q), p.zeta().get(q)) {
            (false, false) => mat_i(),
            (true, false) => mat_x(),
            (false, true) => mat_z(),
            (true, true) => mat_xz(),
        };
        m = m.kron(&f);
    }
    for _ in 0..p.kappa() {
        m = m.scaled_by_i();
    }
    m
}

fn embed_single(n: usize, q: usize, g: &CMat) -> CMat {
    let mut m = CMat::identity(1);
    for k in 0..n {
        let f = if k == q { g.clone() } else { mat_i() };
        m = m.kron(&f);
    }
    m
}

fn cnot_matrix(n: usize, control: usize, target: usize) -> CMat {
    let dim = 1usize << n;
    let mut m = CMat::zeros(dim);
    for col in 0..dim {
        let cbit = col >> (n - 1 - control) & 1;
        let row = if cbit == 1 {
            col ^ (1 << (n - 1 - target))
        } else {
            col
        };
        m.set(row, col, (1, 0));
    }
    m
}

/// Dense unitary of one gate; built directly from the textbook matrices,
/// independent of the library's gate decompositions.
pub fn gate_matrix(n: usize, gate: Gate) -> CMat {
    match gate {
        Gate::H(t) => embed_single(n, t, &mat_h()),
        Gate::S(t) => embed_single(n, t, &mat_s()),
        Gate::Sdg(t) => embed_single(n, t, &mat_sdg()),
        Gate::X(t) => embed_single(n, t, &mat_x()),
        Gate::Y(t) => embed_single(n, t, &mat_y()),
        Gate::Z(t) => embed_single(n, t, &mat_z()),
        Gate::Cnot { control, target } => cnot_matrix(n, control, target),
    }
}

/// Product U = U_k ... U_1 for gates applied in list order.
pub fn circuit_matrix(n: usize, gates: &[Gate]) -> CMat {
    let mut u = CMat::identity(1 << n);
    for &g in gates {
        u = gate_matrix(n, g).mul(&u);
    }
    u
}

/// exp(i theta P / 2) for theta = pi/2 ((I + iP)/sqrt(2)) or pi (iP).
pub fn rotation_matrix(p: &PauliVec, quarter_turns: u32) -> CMat {
    let pm = pauli_matrix(p);
    match quarter_turns {
        1 => {
            let mut m = CMat::identity(pm.dim).add(&pm.scaled_by_i());
            m.scale = 1;
            m
        }
        2 => pm.scaled_by_i(),
        _ => panic!("only pi/2 and pi rotations are supported"),
    }
}

pub fn random_gate(rng: &mut StdRng, n: usize) -> Gate {
    loop {
        match rng.gen_range(0..7) {
            0 => return Gate::H(rng.gen_range(0..n)),
            1 => return Gate::S(rng.gen_range(0..n)),
            2 => return Gate::Sdg(rng.gen_range(0..n)),
            3 => return Gate::X(rng.gen_range(0..n)),
            4 => return Gate::Y(rng.gen_range(0..n)),
            5 => return Gate::Z(rng.gen_range(0..n)),
            _ => {
                if n < 2 {
                    continue;
                }
                let control = rng.gen_range(0..n);
                let target = loop {
                    let t = rng.gen_range(0..n);
                    if t != control {
                        break t;
                    }
                };
                return Gate::Cnot { control, target };
            }
        }
    }
}

pub fn random_circuit(rng: &mut StdRng, n: usize, depth: usize) -> Vec<Gate> {
    (0..depth).map(|_| random_gate(rng, n)).collect()
}

pub fn random_pauli(rng: &mut StdRng, n: usize) -> PauliVec {
    let kappa = rng.gen_range(0..4u8);
    let xi = parityflow::Bits::from_bools((0..n).map(|_| rng.gen_bool(0.5)));
    let zeta = parityflow::Bits::from_bools((0..n).map(|_| rng.gen_bool(0.5)));
    PauliVec::new(n, kappa, xi, zeta)
}

/// Exposed for oracle self-checks in the test files.
pub fn cnot_matrix_for_tests(n: usize, control: usize, target: usize) -> CMat {
    cnot_matrix(n, control, target)
}

pub fn hadamard_for_tests() -> CMat {
    mat_h()
}
