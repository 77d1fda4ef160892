//! The ASCII label grammar for Pauli operators.
//!
//! Grammar: `PHASE [X '(' idx (',' idx)* ')'] [Z '(' idx (',' idx)* ')']`
//! with PHASE one of `+`, `-`, `i`, `-i` (also `i^k` accepted on input) and
//! 1-based qubit indices. The identity operator renders as `+ I`.

use crate::bits::Bits;
use crate::pauli::PauliVec;
use crate::Error;

fn phase_str(kappa: u8) -> &'static str {
    match kappa & 3 {
        0 => "+",
        1 => "i",
        2 => "-",
        _ => "-i",
    }
}

/// Renders a presentation in the canonical label form, indices 1-based and
/// ascending, e.g. `i X(2,3) Z(1,3)`; the identity renders as `+ I`.
pub fn render_label(p: &PauliVec) -> String {
    render_label_with(p, &|i| (i + 1).to_string(), &|i| (i + 1).to_string())
}

/// Label rendering with caller-supplied index tokens, used by the circuit
/// layer to print auxiliary names and their marks. `x_name` tokens are used
/// inside `X(..)`, `z_name` inside `Z(..)`.
pub fn render_label_with(
    p: &PauliVec,
    x_name: &dyn Fn(usize) -> String,
    z_name: &dyn Fn(usize) -> String,
) -> String {
    let mut out = String::from(phase_str(p.kappa()));
    if p.is_phaseless_identity() {
        out.push_str(" I");
        return out;
    }
    if !p.xi().is_zero() {
        let idx: Vec<String> = p.xi().iter_ones().map(x_name).collect();
        out.push_str(" X(");
        out.push_str(&idx.join(","));
        out.push(')');
    }
    if !p.zeta().is_zero() {
        let idx: Vec<String> = p.zeta().iter_ones().map(z_name).collect();
        out.push_str(" Z(");
        out.push_str(&idx.join(","));
        out.push(')');
    }
    out
}

/// Parses a label back into a presentation over `n` qubits.
///
/// Accepts the canonical form plus `i^k` phases, arbitrary spacing between
/// tokens, and indices in any order. Errors carry the byte position.
pub fn parse_label(text: &str, n: usize) -> Result<PauliVec, Error> {
    let mut parser = LabelParser {
        text,
        pos: 0,
        bytes: text.as_bytes(),
    };
    parser.parse(n)
}

struct LabelParser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> LabelParser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(&mut self, n: usize) -> Result<PauliVec, Error> {
        self.skip_ws();
        let kappa = self.parse_phase()?;
        self.skip_ws();
        let mut xi = Bits::zeros(n);
        let mut zeta = Bits::zeros(n);
        if self.eat(b'I') {
            self.skip_ws();
            if self.pos != self.bytes.len() {
                return Err(self.error("trailing input after identity"));
            }
            return Ok(PauliVec::new(n, kappa, xi, zeta));
        }
        if self.peek() == Some(b'X') {
            self.pos += 1;
            self.parse_index_list(n, &mut xi)?;
            self.skip_ws();
        }
        if self.peek() == Some(b'Z') {
            self.pos += 1;
            self.parse_index_list(n, &mut zeta)?;
            self.skip_ws();
        }
        if self.pos != self.bytes.len() {
            return Err(self.error("unexpected trailing input"));
        }
        if xi.is_zero() && zeta.is_zero() {
            return Err(self.error("expected I, X(..) or Z(..)"));
        }
        Ok(PauliVec::new(n, kappa, xi, zeta))
    }

    fn parse_phase(&mut self) -> Result<u8, Error> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Ok(0)
            }
            Some(b'-') => {
                self.pos += 1;
                if self.eat(b'i') {
                    Ok(3)
                } else {
                    Ok(2)
                }
            }
            Some(b'i') => {
                self.pos += 1;
                if self.eat(b'^') {
                    let k = self.parse_number("phase exponent")?;
                    Ok((k % 4) as u8)
                } else {
                    Ok(1)
                }
            }
            _ => Err(self.error("expected phase (+, -, i, -i or i^k)")),
        }
    }

    fn parse_number(&mut self, what: &str) -> Result<usize, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected {what}")));
        }
        self.text[start..self.pos]
            .parse::<usize>()
            .map_err(|_| self.error(format!("{what} out of range")))
    }

    fn parse_index_list(&mut self, n: usize, bits: &mut Bits) -> Result<(), Error> {
        self.skip_ws();
        if !self.eat(b'(') {
            return Err(self.error("expected '('"));
        }
        loop {
            self.skip_ws();
            let idx = self.parse_number("qubit index")?;
            if idx == 0 || idx > n {
                return Err(self.error(format!("qubit index {idx} out of range 1..{n}")));
            }
            if bits.get(idx - 1) {
                return Err(self.error(format!("duplicate qubit index {idx}")));
            }
            bits.set(idx - 1, true);
            self.skip_ws();
            if self.eat(b',') {
                continue;
            }
            if self.eat(b')') {
                return Ok(());
            }
            return Err(self.error("expected ',' or ')'"));
        }
    }
}
