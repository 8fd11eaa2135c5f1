use std::fmt;

/// Resource limits. Exceeding one is reported as an error, never as an
/// answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Total length accepted by `shuffle_tuple`.
    pub shuffle_len: usize,
    /// Semiautomaton states for monoid construction.
    pub monoid_states: usize,
    /// Monoid elements.
    pub monoid_elements: usize,
    /// Vertices for materialized topological sort enumeration.
    pub topo_enum: usize,
    /// Vertices for brute force on general DAGs (bitmask search).
    pub brute_vertices: usize,
    /// Search nodes visited by any memoized search.
    pub search_states: usize,
    /// Bound on the product of chain lengths times automaton states.
    pub bounded_width: usize,
    /// String count up to which dispatch uses the chain dynamic program.
    pub max_chains: usize,
    /// Enumerated frequent-slice aggregates in the segmented solver.
    pub aggregates: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            shuffle_len: 14,
            monoid_states: 12,
            monoid_elements: 100_000,
            topo_enum: 12,
            brute_vertices: 24,
            search_states: 20_000_000,
            bounded_width: 1 << 27,
            max_chains: 4,
            aggregates: 200_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapsParseError(pub String);

impl fmt::Display for CapsParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad caps override: {}", self.0)
    }
}

impl std::error::Error for CapsParseError {}

impl Caps {
    /// Apply overrides of the form `name=value,name=value`.
    pub fn with_overrides(mut self, text: &str) -> Result<Caps, CapsParseError> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| CapsParseError(item.to_string()))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| CapsParseError(item.to_string()))?;
            let slot = match key.trim() {
                "shuffle_len" => &mut self.shuffle_len,
                "monoid_states" => &mut self.monoid_states,
                "monoid_elements" => &mut self.monoid_elements,
                "topo_enum" => &mut self.topo_enum,
                "brute_vertices" => &mut self.brute_vertices,
                "search_states" => &mut self.search_states,
                "bounded_width" => &mut self.bounded_width,
                "max_chains" => &mut self.max_chains,
                "aggregates" => &mut self.aggregates,
                _ => return Err(CapsParseError(item.to_string())),
            };
            *slot = value;
        }
        if self.brute_vertices > 64 {
            return Err(CapsParseError("brute_vertices must be at most 64".into()));
        }
        Ok(self)
    }

    pub fn monoid(&self) -> crate::monoid::MonoidCaps {
        crate::monoid::MonoidCaps {
            max_states: self.monoid_states,
            max_elements: self.monoid_elements,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let c = Caps::default().with_overrides("brute_vertices=30, max_chains=2").unwrap();
        assert_eq!(c.brute_vertices, 30);
        assert_eq!(c.max_chains, 2);
        assert!(Caps::default().with_overrides("nope=1").is_err());
        assert!(Caps::default().with_overrides("brute_vertices=65").is_err());
    }
}
