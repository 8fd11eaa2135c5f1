use serde::Serialize;

use super::TransitionMonoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Complexity {
    #[serde(rename = "NL")]
    Nl,
    #[serde(rename = "NP-complete")]
    NpComplete,
    #[serde(rename = "unknown")]
    Unknown,
}

/// First pair `(x, y)` (by element order) violating an equation, with
/// shortest representative words and the state maps of both elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub x: usize,
    pub y: usize,
    pub x_word: String,
    pub y_word: String,
    pub x_map: Vec<usize>,
    pub y_map: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub monoid_size: usize,
    pub omega: u64,
    pub aperiodic: bool,
    pub group: bool,
    pub in_da: bool,
    pub in_do: bool,
    pub in_ds: bool,
    pub cts: Complexity,
    pub csh: Complexity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aperiodic_witness: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub da_witness: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub do_witness: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ds_witness: Option<Violation>,
}

impl TransitionMonoid {
    fn violation(&self, x: usize, y: usize) -> Violation {
        Violation {
            x,
            y,
            x_word: self.word(x).to_string(),
            y_word: self.word(y).to_string(),
            x_map: self.elements()[x].clone(),
            y_map: self.elements()[y].clone(),
        }
    }

    fn first_pair(&self, bad: impl Fn(usize, usize) -> bool) -> Option<Violation> {
        for x in 0..self.len() {
            for y in 0..self.len() {
                if bad(x, y) {
                    return Some(self.violation(x, y));
                }
            }
        }
        None
    }

    /// `x^(ω+1) = x^ω` for all x.
    pub fn aperiodic_violation(&self) -> Option<Violation> {
        (0..self.len()).find_map(|x| {
            let e = self.omega_power(x);
            (self.mul(e, x) != e).then(|| self.violation(x, x))
        })
    }

    pub fn is_aperiodic(&self) -> bool {
        self.aperiodic_violation().is_none()
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|x| self.is_permutation(x))
    }

    /// `(xy)^ω x (xy)^ω = (xy)^ω`.
    pub fn da_violation(&self) -> Option<Violation> {
        self.first_pair(|x, y| {
            let e = self.omega_power(self.mul(x, y));
            self.mul(self.mul(e, x), e) != e
        })
    }

    fn xy_yx(&self, x: usize, y: usize) -> (usize, usize) {
        (
            self.omega_power(self.mul(x, y)),
            self.omega_power(self.mul(y, x)),
        )
    }

    /// `(xy)^ω (yx)^ω (xy)^ω = (xy)^ω`.
    pub fn do_violation(&self) -> Option<Violation> {
        self.first_pair(|x, y| {
            let (e, f) = self.xy_yx(x, y);
            self.mul(self.mul(e, f), e) != e
        })
    }

    /// `((xy)^ω (yx)^ω (xy)^ω)^ω = (xy)^ω`.
    pub fn ds_violation(&self) -> Option<Violation> {
        self.first_pair(|x, y| {
            let (e, f) = self.xy_yx(x, y);
            self.omega_power(self.mul(self.mul(e, f), e)) != e
        })
    }

    pub fn in_da(&self) -> bool {
        self.da_violation().is_none()
    }

    pub fn in_do(&self) -> bool {
        self.do_violation().is_none()
    }

    pub fn in_ds(&self) -> bool {
        self.ds_violation().is_none()
    }

    pub fn classify(&self) -> ClassificationReport {
        let aperiodic_witness = self.aperiodic_violation();
        let da_witness = self.da_violation();
        let do_witness = self.do_violation();
        let ds_witness = self.ds_violation();
        let aperiodic = aperiodic_witness.is_none();
        let (in_da, in_do, in_ds) = (da_witness.is_none(), do_witness.is_none(), ds_witness.is_none());
        let (cts, csh) = verdicts(aperiodic, in_da, in_do, in_ds);
        ClassificationReport {
            monoid_size: self.len(),
            omega: self.omega(),
            aperiodic,
            group: self.is_group(),
            in_da,
            in_do,
            in_ds,
            cts,
            csh,
            aperiodic_witness,
            da_witness,
            do_witness,
            ds_witness,
        }
    }
}

/// Complexity verdicts for the constrained topological sort and the
/// constrained shuffle problem. Hardness of the shuffle variant carries over
/// to topological sorts, which are a generalization.
pub fn verdicts(aperiodic: bool, da: bool, do_: bool, ds: bool) -> (Complexity, Complexity) {
    use Complexity::*;
    match (aperiodic, da, do_, ds) {
        (true, true, _, _) => (Nl, Nl),
        (true, false, _, _) => (NpComplete, NpComplete),
        (false, _, true, _) => (Unknown, Nl),
        (false, _, false, false) => (NpComplete, NpComplete),
        (false, _, false, true) => (Unknown, Unknown),
    }
}
