use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::group::{DistrictJson, GroupJson};
use super::{DistrictMonomial, GroupPresentation, Monomial, SolveError};
use crate::lang::{literal_symbols, Alphabet, AutomatonJson, Dfa, PairJson, Regex, Semiautomaton, StatePairSpec};

/// A target language in one of the supported forms.
#[derive(Clone, Debug)]
pub enum LanguageSpec {
    Regex(String),
    Monomial(Monomial),
    Union(Vec<LanguageSpec>),
    Group(GroupPresentation),
    District(DistrictMonomial),
    /// Intersection of the languages of several (initial, finals) pairs.
    Semiautomaton(Semiautomaton, StatePairSpec),
    Dfa(Dfa),
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    gaps: Vec<String>,
    pivots: String,
}

impl LanguageSpec {
    pub fn regex(text: &str) -> LanguageSpec {
        LanguageSpec::Regex(text.to_string())
    }

    /// JSON object, or a bare regex when the text does not start with `{`.
    pub fn parse(text: &str) -> Result<LanguageSpec, SolveError> {
        let t = text.trim();
        if t.starts_with('{') {
            let v: Value = serde_json::from_str(t).map_err(|e| SolveError::Spec(e.to_string()))?;
            LanguageSpec::from_json(&v)
        } else {
            Ok(LanguageSpec::Regex(t.to_string()))
        }
    }

    pub fn from_json(v: &Value) -> Result<LanguageSpec, SolveError> {
        let bad = |m: String| SolveError::Spec(m);
        let obj = v.as_object().ok_or_else(|| bad("language must be a JSON object".into()))?;
        let de = |x: &Value| -> Result<_, SolveError> { Ok(x.clone()) };
        if let Some(r) = obj.get("regex") {
            let text = r.as_str().ok_or_else(|| bad("regex must be a string".into()))?;
            return Ok(LanguageSpec::Regex(text.to_string()));
        }
        if let Some(m) = obj.get("monomial") {
            let m: MonomialJson = serde_json::from_value(de(m)?).map_err(|e| bad(e.to_string()))?;
            let gaps: Vec<&str> = m.gaps.iter().map(String::as_str).collect();
            return Ok(LanguageSpec::Monomial(Monomial::parse(&gaps, &m.pivots)?));
        }
        if let Some(u) = obj.get("union") {
            let parts = u.as_array().ok_or_else(|| bad("union must be a list".into()))?;
            return Ok(LanguageSpec::Union(parts.iter().map(LanguageSpec::from_json).collect::<Result<_, _>>()?));
        }
        if let Some(g) = obj.get("group") {
            let g: GroupJson = serde_json::from_value(de(g)?).map_err(|e| bad(e.to_string()))?;
            return Ok(LanguageSpec::Group(GroupPresentation::from_json(&g)?));
        }
        if let Some(d) = obj.get("district") {
            let d: DistrictJson = serde_json::from_value(de(d)?).map_err(|e| bad(e.to_string()))?;
            return Ok(LanguageSpec::District(DistrictMonomial::from_json(&d)?));
        }
        if let Some(s) = obj.get("semiautomaton") {
            let mut a: AutomatonJson = serde_json::from_value(de(s)?).map_err(|e| bad(e.to_string()))?;
            if let Some(p) = obj.get("pairs") {
                a.pairs = serde_json::from_value(de(p)?).map_err(|e| bad(e.to_string()))?;
            }
            return Ok(LanguageSpec::Semiautomaton(a.semiautomaton()?, a.pair_spec()?));
        }
        if let Some(d) = obj.get("dfa") {
            let a: AutomatonJson = serde_json::from_value(de(d)?).map_err(|e| bad(e.to_string()))?;
            return Ok(LanguageSpec::Dfa(a.dfa()?));
        }
        Err(bad("expected one of regex, monomial, union, group, district, semiautomaton, dfa".into()))
    }

    pub fn to_json(&self) -> Value {
        match self {
            LanguageSpec::Regex(r) => json!({ "regex": r }),
            LanguageSpec::Monomial(m) => json!({ "monomial": MonomialJson {
                gaps: m.gaps.iter().map(|g| g.iter().collect()).collect(),
                pivots: m.pivots.iter().collect(),
            }}),
            LanguageSpec::Union(parts) => json!({ "union": parts.iter().map(LanguageSpec::to_json).collect::<Vec<_>>() }),
            LanguageSpec::Group(g) => json!({ "group": g.to_json() }),
            LanguageSpec::District(d) => json!({ "district": d.to_json() }),
            LanguageSpec::Semiautomaton(sa, spec) => {
                let names = &sa.names;
                let delta = names
                    .iter()
                    .enumerate()
                    .map(|(q, n)| {
                        let row = sa.alphabet.symbols().iter().enumerate();
                        (n.clone(), row.map(|(i, c)| (c.to_string(), names[sa.delta[q][i]].clone())).collect())
                    })
                    .collect();
                let pairs: Vec<PairJson> = spec
                    .pairs
                    .iter()
                    .map(|(q, f)| PairJson {
                        initial: names[*q].clone(),
                        finals: (0..f.len()).filter(|&i| f[i]).map(|i| names[i].clone()).collect(),
                    })
                    .collect();
                let a = AutomatonJson {
                    states: names.clone(),
                    alphabet: sa.alphabet.to_string(),
                    delta,
                    initial: None,
                    finals: None,
                    pairs: Vec::new(),
                };
                json!({ "semiautomaton": a, "pairs": pairs })
            }
            LanguageSpec::Dfa(d) => json!({ "dfa": AutomatonJson::from_dfa(d) }),
        }
    }

    /// Symbols the specification mentions.
    pub fn letters(&self) -> Vec<char> {
        match self {
            LanguageSpec::Regex(r) => literal_symbols(r),
            LanguageSpec::Monomial(m) => m.letters(),
            LanguageSpec::Union(parts) => {
                let mut out = Vec::new();
                for c in parts.iter().flat_map(LanguageSpec::letters) {
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
                out
            }
            LanguageSpec::Group(g) => g.alphabet().symbols().to_vec(),
            LanguageSpec::District(d) => d.letters().into_iter().collect(),
            LanguageSpec::Semiautomaton(sa, _) => sa.alphabet.symbols().to_vec(),
            LanguageSpec::Dfa(d) => d.alphabet().symbols().to_vec(),
        }
    }

    /// Minimal DFA over `alphabet` together with the specification's own
    /// symbols. Symbols foreign to an automaton or group lead to rejection;
    /// `.` in a regex ranges over the whole combined alphabet.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Result<Dfa, SolveError> {
        let full = alphabet.union(&Alphabet::new(self.letters())?);
        Ok(match self {
            LanguageSpec::Regex(r) => Dfa::from_regex(&Regex::parse(r, &full)?, &full).minimize(),
            LanguageSpec::Monomial(m) => m.to_dfa(&full)?.minimize(),
            LanguageSpec::Union(parts) => {
                let empty = Dfa::from_parts(full.clone(), vec![vec![0; full.len()]], 0, vec![false]);
                parts
                    .iter()
                    .try_fold(empty, |acc, p| acc.union(&p.to_dfa(&full)?).map_err(SolveError::from))?
                    .minimize()
            }
            LanguageSpec::Group(g) => g.to_dfa(&full),
            LanguageSpec::District(d) => d.to_dfa(&full),
            LanguageSpec::Semiautomaton(sa, spec) => sa.intersection_dfa(spec)?.minimize().widen(&full),
            LanguageSpec::Dfa(d) => d.minimize().widen(&full),
        })
    }
}
