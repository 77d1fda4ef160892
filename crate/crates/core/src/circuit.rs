//! Circuit data model, text format and the tracking driver.
//!
//! The text format is line-oriented with `#` comments:
//!
//! ```text
//! qubits <n>                # logical qubit count, first line
//! aux <name> <0|1|+|-|+i|-i>   # auxiliary declaration + initialization
//! h|s|sdg|x|y|z <q>
//! cnot <control> <target>
//! rx|ry|rz <q> <angle>
//! rot <pauli-string> <q...> <angle>
//! slice                     # snapshot marker
//! ```
//!
//! Qubit tokens are 1-based integers for logical qubits or the declared
//! auxiliary names; internally qubits are 0-based with the auxiliaries
//! placed after the logical qubits in declaration order. Rotation angles
//! are opaque text, never evaluated.

use crate::bits::Bits;
use crate::combined::CombinedTableau;
use crate::label::render_label_with;
use crate::pauli::PauliVec;
use crate::stabilizer::{
    check_rotation, init_aux, AuxRegistry, AuxSpec, AuxState, RotationReport,
};
use crate::tableau::Gate;
use crate::Error;

/// One step of a parsed circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Clifford(Gate),
    Rotation {
        /// Rotation axis over all qubits, in the usual presentation.
        axis: PauliVec,
        /// Symbolic angle text, e.g. `2*gamma`.
        angle: String,
    },
    Slice,
}

/// Display names of the qubits: numbers for logical, letters for auxiliary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QubitNames {
    n_logical: usize,
    aux_names: Vec<String>,
}

impl QubitNames {
    pub fn n_total(&self) -> usize {
        self.n_logical + self.aux_names.len()
    }

    pub fn n_logical(&self) -> usize {
        self.n_logical
    }

    pub fn name(&self, index: usize) -> String {
        if index < self.n_logical {
            (index + 1).to_string()
        } else {
            self.aux_names[index - self.n_logical].clone()
        }
    }

    pub fn resolve(&self, token: &str) -> Option<usize> {
        if let Ok(k) = token.parse::<usize>() {
            return (k >= 1 && k <= self.n_logical).then(|| k - 1);
        }
        self.aux_names
            .iter()
            .position(|n| n == token)
            .map(|p| self.n_logical + p)
    }
}

/// A parsed circuit: qubit layout, auxiliary initializations and steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    names: QubitNames,
    aux_specs: Vec<(String, AuxState)>,
    steps: Vec<Step>,
}

impl Circuit {
    pub fn names(&self) -> &QubitNames {
        &self.names
    }

    pub fn n_total(&self) -> usize {
        self.names.n_total()
    }

    pub fn n_logical(&self) -> usize {
        self.names.n_logical()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn aux_specs(&self) -> &[(String, AuxState)] {
        &self.aux_specs
    }

    /// Canonical text form; reparsing it yields an identical circuit.
    pub fn to_text(&self) -> String {
        let mut out = format!("qubits {}\n", self.n_logical());
        for (name, state) in &self.aux_specs {
            out.push_str(&format!("aux {} {}\n", name, state.as_str()));
        }
        for step in &self.steps {
            match step {
                Step::Clifford(g) => {
                    let line = match *g {
                        Gate::H(t) => format!("h {}", self.names.name(t)),
                        Gate::S(t) => format!("s {}", self.names.name(t)),
                        Gate::Sdg(t) => format!("sdg {}", self.names.name(t)),
                        Gate::X(t) => format!("x {}", self.names.name(t)),
                        Gate::Y(t) => format!("y {}", self.names.name(t)),
                        Gate::Z(t) => format!("z {}", self.names.name(t)),
                        Gate::Cnot { control, target } => {
                            format!("cnot {} {}", self.names.name(control), self.names.name(target))
                        }
                    };
                    out.push_str(&line);
                    out.push('\n');
                }
                Step::Rotation { axis, angle } => {
                    out.push_str(&render_rotation(axis, angle, &self.names));
                    out.push('\n');
                }
                Step::Slice => out.push_str("slice\n"),
            }
        }
        out
    }
}

fn render_rotation(axis: &PauliVec, angle: &str, names: &QubitNames) -> String {
    let support: Vec<usize> = (0..axis.n())
        .filter(|&i| axis.xi().get(i) || axis.zeta().get(i))
        .collect();
    let mut letters = String::new();
    let mut y_count = 0u8;
    for &i in &support {
        letters.push(match (axis.xi().get(i), axis.zeta().get(i)) {
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => {
                y_count = (y_count + 1) & 3;
                'Y'
            }
            (false, false) => unreachable!(),
        });
    }
    let phase = (axis.kappa() + 4 - y_count) & 3;
    let prefix = match phase {
        0 => "",
        1 => "i",
        2 => "-",
        _ => "-i",
    };
    if letters.is_empty() {
        // phase-only axis; render as an explicit identity on qubit 1
        return format!("rot {prefix}I 1 {angle}");
    }
    let qubits: Vec<String> = support.iter().map(|&i| names.name(i)).collect();
    format!("rot {}{} {} {}", prefix, letters, qubits.join(" "), angle)
}

const RESERVED: &[&str] = &[
    "qubits", "aux", "h", "s", "sdg", "x", "y", "z", "cnot", "rx", "ry", "rz", "rot", "slice",
];

/// Parses the circuit text format; the first error is reported with its
/// line and column.
pub fn parse_circuit(text: &str) -> Result<Circuit, Error> {
    let mut n_logical: Option<usize> = None;
    let mut aux_specs: Vec<(String, AuxState)> = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    let mut ops_started = false;

    for (line_idx, raw_line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        };
        let tokens = tokenize(line);
        if tokens.is_empty() {
            continue;
        }
        let (head, head_col) = (tokens[0].0, tokens[0].1);
        let args = &tokens[1..];
        let err = |col: usize, msg: String| Error::parse(line_no, col, msg);

        if head == "qubits" {
            if n_logical.is_some() {
                return Err(err(head_col, "duplicate qubits declaration".into()));
            }
            if ops_started || !aux_specs.is_empty() {
                return Err(err(head_col, "qubits must be declared first".into()));
            }
            let (tok, col) = expect_one(args, line_no, head_col, "qubit count")?;
            let n = tok
                .parse::<usize>()
                .map_err(|_| err(col, format!("invalid qubit count `{tok}`")))?;
            n_logical = Some(n);
            continue;
        }

        let n_log = n_logical.ok_or_else(|| {
            err(head_col, "expected `qubits <n>` before any other line".into())
        })?;

        if head == "aux" {
            if ops_started {
                return Err(err(head_col, "auxiliary declarations must precede gates".into()));
            }
            if args.len() != 2 {
                return Err(err(head_col, "usage: aux <name> <0|1|+|-|+i|-i>".into()));
            }
            let (name, name_col) = args[0];
            if !is_valid_aux_name(name) {
                return Err(err(name_col, format!("invalid auxiliary name `{name}`")));
            }
            if RESERVED.contains(&name) {
                return Err(err(name_col, format!("`{name}` is a reserved word")));
            }
            if aux_specs.iter().any(|(n, _)| n == name) {
                return Err(err(name_col, format!("duplicate auxiliary init for `{name}`")));
            }
            let (state_tok, state_col) = args[1];
            let state = AuxState::parse(state_tok)
                .ok_or_else(|| err(state_col, format!("unknown init state `{state_tok}`")))?;
            aux_specs.push((name.to_string(), state));
            continue;
        }

        // from here on we are in the op section
        ops_started = true;
        let names = QubitNames {
            n_logical: n_log,
            aux_names: aux_specs.iter().map(|(n, _)| n.clone()).collect(),
        };
        let resolve = |tok: &str, col: usize| {
            names
                .resolve(tok)
                .ok_or_else(|| Error::parse(line_no, col, format!("undeclared qubit `{tok}`")))
        };

        match head {
            "slice" => {
                if !args.is_empty() {
                    return Err(err(args[0].1, "slice takes no arguments".into()));
                }
                steps.push(Step::Slice);
            }
            "h" | "s" | "sdg" | "x" | "y" | "z" => {
                let (tok, col) = expect_one(args, line_no, head_col, "qubit")?;
                let q = resolve(tok, col)?;
                let gate = match head {
                    "h" => Gate::H(q),
                    "s" => Gate::S(q),
                    "sdg" => Gate::Sdg(q),
                    "x" => Gate::X(q),
                    "y" => Gate::Y(q),
                    _ => Gate::Z(q),
                };
                steps.push(Step::Clifford(gate));
            }
            "cnot" => {
                if args.len() != 2 {
                    return Err(err(head_col, "usage: cnot <control> <target>".into()));
                }
                let c = resolve(args[0].0, args[0].1)?;
                let t = resolve(args[1].0, args[1].1)?;
                if c == t {
                    return Err(err(args[1].1, "control equals target".into()));
                }
                steps.push(Step::Clifford(Gate::Cnot { control: c, target: t }));
            }
            "rx" | "ry" | "rz" => {
                if args.len() != 2 {
                    return Err(err(head_col, format!("usage: {head} <qubit> <angle>")));
                }
                let q = resolve(args[0].0, args[0].1)?;
                let n = names.n_total();
                let axis = match head {
                    "rx" => PauliVec::x(n, q),
                    "ry" => PauliVec::y(n, q),
                    _ => PauliVec::z(n, q),
                };
                steps.push(Step::Rotation {
                    axis,
                    angle: args[1].0.to_string(),
                });
            }
            "rot" => {
                if args.len() < 2 {
                    return Err(err(head_col, "usage: rot <pauli-string> <qubit...> <angle>".into()));
                }
                let (pstr, pcol) = args[0];
                let (phase, letters) = split_pauli_string(pstr)
                    .ok_or_else(|| err(pcol, format!("malformed Pauli string `{pstr}`")))?;
                let qubit_args = &args[1..args.len() - 1];
                if qubit_args.len() != letters.len() {
                    return Err(err(
                        pcol,
                        format!(
                            "Pauli string has {} letters but {} qubits listed",
                            letters.len(),
                            qubit_args.len()
                        ),
                    ));
                }
                let n = names.n_total();
                let mut kappa = phase;
                let mut xi = Bits::zeros(n);
                let mut zeta = Bits::zeros(n);
                for (letter, &(tok, col)) in letters.chars().zip(qubit_args) {
                    let q = resolve(tok, col)?;
                    if xi.get(q) || zeta.get(q) {
                        return Err(err(col, format!("duplicate qubit `{tok}` in rotation")));
                    }
                    match letter {
                        'I' => {}
                        'X' => xi.set(q, true),
                        'Z' => zeta.set(q, true),
                        'Y' => {
                            kappa = (kappa + 1) & 3;
                            xi.set(q, true);
                            zeta.set(q, true);
                        }
                        _ => unreachable!(),
                    }
                }
                let (angle, _) = args[args.len() - 1];
                steps.push(Step::Rotation {
                    axis: PauliVec::new(n, kappa, xi, zeta),
                    angle: angle.to_string(),
                });
            }
            _ => return Err(err(head_col, format!("unknown gate `{head}`"))),
        }
    }

    let n_logical = n_logical
        .ok_or_else(|| Error::parse(1, 1, "missing `qubits <n>` declaration".to_string()))?;
    let names = QubitNames {
        n_logical,
        aux_names: aux_specs.iter().map(|(n, _)| n.clone()).collect(),
    };
    Ok(Circuit {
        names,
        aux_specs,
        steps,
    })
}

fn tokenize(line: &str) -> Vec<(&str, usize)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((&line[s..i], s + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((&line[s..], s + 1));
    }
    tokens
}

fn expect_one<'a>(
    args: &[(&'a str, usize)],
    line: usize,
    head_col: usize,
    what: &str,
) -> Result<(&'a str, usize), Error> {
    if args.len() == 1 {
        Ok(args[0])
    } else {
        Err(Error::parse(line, head_col, format!("expected exactly one {what}")))
    }
}

fn is_valid_aux_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// Splits `iXZ` into the phase exponent and the letter block.
fn split_pauli_string(s: &str) -> Option<(u8, &str)> {
    let (phase, rest) = if let Some(r) = s.strip_prefix("-i") {
        (3, r)
    } else if let Some(r) = s.strip_prefix('-') {
        (2, r)
    } else if let Some(r) = s.strip_prefix('i') {
        (1, r)
    } else if let Some(r) = s.strip_prefix('+') {
        (0, r)
    } else {
        (0, s)
    };
    if rest.is_empty() || !rest.chars().all(|c| matches!(c, 'I' | 'X' | 'Y' | 'Z')) {
        return None;
    }
    Some((phase, rest))
}

/// One checked rotation with its position in the timeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationRecord {
    /// Snapshot index (number of Clifford steps applied) at the rotation.
    pub step: usize,
    pub angle: String,
    pub report: RotationReport,
}

/// The result of tracking a circuit: a snapshot after every Clifford step,
/// the slice positions, and a report per rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Timeline {
    names: QubitNames,
    registry: AuxRegistry,
    snapshots: Vec<CombinedTableau>,
    slices: Vec<usize>,
    reports: Vec<RotationRecord>,
}

/// Tracks a circuit: initializes the combined tableau and the auxiliaries,
/// folds every Clifford step and checks every rotation against the marks.
pub fn track(circuit: &Circuit) -> Timeline {
    let n_total = circuit.n_total();
    let n_logical = circuit.n_logical();
    let mut ct = CombinedTableau::new(n_total);
    let mut registry = AuxRegistry::new(n_total, n_logical);
    for (pos, (_, state)) in circuit.aux_specs.iter().enumerate() {
        let spec = AuxSpec {
            qubit: n_logical + pos,
            state: *state,
        };
        init_aux(&mut ct, &mut registry, spec)
            .expect("parser guarantees unique auxiliary declarations");
    }
    let mut snapshots = vec![ct.clone()];
    let mut slices = Vec::new();
    let mut reports = Vec::new();
    for step in &circuit.steps {
        match step {
            Step::Clifford(g) => {
                ct.apply_gate(*g);
                snapshots.push(ct.clone());
            }
            Step::Rotation { axis, angle } => {
                let report = check_rotation(&ct, &registry, axis);
                reports.push(RotationRecord {
                    step: snapshots.len() - 1,
                    angle: angle.clone(),
                    report,
                });
            }
            Step::Slice => slices.push(snapshots.len() - 1),
        }
    }
    Timeline {
        names: circuit.names.clone(),
        registry,
        snapshots,
        slices,
        reports,
    }
}

impl Timeline {
    pub fn names(&self) -> &QubitNames {
        &self.names
    }

    pub fn registry(&self) -> &AuxRegistry {
        &self.registry
    }

    /// Number of tracked Clifford steps.
    pub fn n_steps(&self) -> usize {
        self.snapshots.len() - 1
    }

    /// State after the first `step` Clifford gates.
    pub fn snapshot(&self, step: usize) -> Option<&CombinedTableau> {
        self.snapshots.get(step)
    }

    pub fn final_state(&self) -> &CombinedTableau {
        self.snapshots.last().unwrap()
    }

    pub fn slices(&self) -> &[usize] {
        &self.slices
    }

    pub fn reports(&self) -> &[RotationRecord] {
        &self.reports
    }

    /// Rendered labels at a snapshot; None if the step is out of range.
    pub fn labels_at(&self, step: usize) -> Option<String> {
        self.snapshot(step)
            .map(|ct| render_labels(ct, &self.names, &self.registry))
    }

    /// One line per report: `ALLOWED <label> => <stripped>` or
    /// `VIOLATES aux=<names> <label>`.
    pub fn report_lines(&self) -> Vec<String> {
        self.reports
            .iter()
            .map(|r| render_report(&r.report, &self.names, &self.registry))
            .collect()
    }

    pub fn any_violation(&self) -> bool {
        self.reports.iter().any(|r| !r.report.allowed)
    }

    /// Deterministic JSON dump of the whole timeline.
    pub fn to_json(&self) -> serde_json::Value {
        let aux: Vec<serde_json::Value> = self
            .registry
            .aux_qubits()
            .map(|q| {
                serde_json::json!({
                    "name": self.names.name(q),
                    "state": self.registry.state(q).unwrap().as_str(),
                })
            })
            .collect();
        let reports: Vec<serde_json::Value> = self
            .reports
            .iter()
            .map(|r| {
                let rep = &r.report;
                serde_json::json!({
                    "step": r.step,
                    "angle": r.angle,
                    "allowed": rep.allowed,
                    "raw": render_named_label(&rep.raw_label, &self.names, &self.registry),
                    "logical": rep.logical.as_ref().map(crate::label::render_label),
                    "violating": rep.violating_auxes.iter().map(|&q| self.names.name(q)).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "n_logical": self.names.n_logical(),
            "n_total": self.names.n_total(),
            "aux": aux,
            "slices": self.slices,
            "reports": reports,
            "final": self.final_state().to_json(),
        })
    }
}

/// Index token inside an X(..) list: aux names carry their mark suffix.
fn x_index_name(i: usize, names: &QubitNames, registry: &AuxRegistry) -> String {
    let base = names.name(i);
    match registry.mark(i) {
        Some(m) if m.trivial == crate::combined::Generator::X(i) => format!("{base}."),
        Some(_) => format!("{base}!"),
        None => base,
    }
}

fn z_index_name(i: usize, names: &QubitNames, registry: &AuxRegistry) -> String {
    let base = names.name(i);
    match registry.mark(i) {
        Some(m) if m.trivial == crate::combined::Generator::Z(i) => format!("{base}."),
        Some(_) => format!("{base}!"),
        None => base,
    }
}

/// Label over all qubits with names and auxiliary marks.
pub fn render_named_label(p: &PauliVec, names: &QubitNames, registry: &AuxRegistry) -> String {
    render_label_with(
        p,
        &|i| x_index_name(i, names, registry),
        &|i| z_index_name(i, names, registry),
    )
}

fn render_report(report: &RotationReport, names: &QubitNames, registry: &AuxRegistry) -> String {
    let raw = render_named_label(&report.raw_label, names, registry);
    if report.allowed {
        let logical = crate::label::render_label(report.logical.as_ref().unwrap());
        format!("ALLOWED {raw} => {logical}")
    } else {
        let auxes: Vec<String> = report
            .violating_auxes
            .iter()
            .map(|&q| names.name(q))
            .collect();
        format!("VIOLATES aux={} {raw}", auxes.join(","))
    }
}

/// One line per qubit with its X- and Z-label plus the phase header line.
pub fn render_labels(
    ct: &CombinedTableau,
    names: &QubitNames,
    registry: &AuxRegistry,
) -> String {
    let n = ct.n();
    let width = (0..n).map(|i| names.name(i).len()).max().unwrap_or(1);
    let mut out = format!("cp {}\n", ct.render_phase_header());
    for q in 0..n {
        let xl = render_named_label(ct.flow().x_row(q), names, registry);
        let zl = render_named_label(ct.flow().z_row(q), names, registry);
        out.push_str(&format!(
            "{:<width$}  X: {}  Z: {}\n",
            names.name(q),
            xl,
            zl,
            width = width
        ));
    }
    out
}
