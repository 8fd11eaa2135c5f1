use super::ReductionError;
use crate::dag::{Instance, LabeledDag, ShuffleInstance};
use crate::lang::Alphabet;

fn word_len(inst: &Instance) -> usize {
    inst.dag().labels().iter().map(|l| l.chars().count()).sum()
}

/// The instance plus one separate string (or path) spelling `f`.
pub fn shuffle_reduce(inst: &Instance, f: &str) -> Result<Instance, ReductionError> {
    let extra = Alphabet::spanning([f]).map_err(crate::dag::DagError::from)?;
    let alphabet = inst.alphabet().union(&extra);
    Ok(match inst {
        Instance::Strings(s) => {
            let mut strings = s.strings().to_vec();
            strings.push(f.to_string());
            Instance::Strings(ShuffleInstance::new(alphabet, strings)?)
        }
        Instance::Dag(g) => {
            let path = ShuffleInstance::new(alphabet, vec![f.to_string()])?;
            Instance::Dag(g.disjoint_union(path.dag()))
        }
    })
}

/// [`shuffle_reduce`] after checking that `f` is the filter word for the
/// instance's length.
pub fn shuffle_reduce_checked(
    inst: &Instance,
    f: &str,
    filter: impl Fn(usize) -> Result<String, ReductionError>,
) -> Result<Instance, ReductionError> {
    let expected = filter(word_len(inst))?;
    if expected != f {
        return Err(ReductionError::LengthMismatch {
            expected: expected.chars().count(),
            got: f.chars().count(),
        });
    }
    shuffle_reduce(inst, f)
}

/// Strings `a^e b^e` for every `e`, to be interleaved into `(a^B b^B)*`.
/// Requires `B/4 < e < B/2` for every `e` and `Σe = mB` with `3m` numbers.
pub fn gen_unary3partition(numbers: &[usize], b: usize) -> Result<(ShuffleInstance, String), ReductionError> {
    let fail = |m: String| Err(ReductionError::Precondition(m));
    if numbers.len() % 3 != 0 {
        return fail(format!("{} numbers is not a multiple of 3", numbers.len()));
    }
    let m = numbers.len() / 3;
    if numbers.iter().sum::<usize>() != m * b {
        return fail(format!("the numbers must sum to {}", m * b));
    }
    if let Some(&e) = numbers.iter().find(|&&e| 4 * e <= b || 2 * e >= b) {
        return fail(format!("{e} is not strictly between B/4 and B/2"));
    }
    let strings = numbers.iter().map(|&e| "a".repeat(e) + &"b".repeat(e)).collect();
    let alphabet = Alphabet::new("ab".chars()).expect("valid");
    let target = format!("({}{})*", "a".repeat(b), "b".repeat(b));
    Ok((ShuffleInstance::new(alphabet, strings)?, target))
}

/// Whether the numbers split into triples of sum `b` each.
pub fn three_partition_exists(numbers: &[usize], b: usize) -> bool {
    fn go(rest: &mut Vec<usize>, b: usize) -> bool {
        let Some(first) = rest.pop() else { return true };
        let n = rest.len();
        for i in 0..n {
            for j in i + 1..n {
                if first + rest[i] + rest[j] == b {
                    let mut next: Vec<usize> =
                        (0..n).filter(|&k| k != i && k != j).map(|k| rest[k]).collect();
                    if go(&mut next, b) {
                        rest.push(first);
                        return true;
                    }
                }
            }
        }
        rest.push(first);
        false
    }
    numbers.len() % 3 == 0 && go(&mut numbers.to_vec(), b)
}

/// `w` in lowercase and each `u ∈ U` in uppercase; some interleaving lies
/// in `(aA+bB)*` iff `w` is an interleaving of the words of `U`.
pub fn gen_tagged_shuffle(w: &str, us: &[&str]) -> Result<(ShuffleInstance, String), ReductionError> {
    if let Some(c) = us.iter().flat_map(|u| u.chars()).chain(w.chars()).find(|&c| c != 'a' && c != 'b') {
        return Err(ReductionError::Precondition(format!("letter '{c}' outside a, b")));
    }
    let mut strings = vec![w.to_string()];
    strings.extend(us.iter().map(|u| u.to_uppercase()));
    let alphabet = Alphabet::new("abAB".chars()).expect("valid");
    Ok((ShuffleInstance::new(alphabet, strings)?, "(aA+bB)*".to_string()))
}

/// For `(ab+b)*`: unequal letter counts settle the answer as "no" (`None`);
/// otherwise the instance is unchanged and the question becomes `(ab)*`.
pub fn reduce_abb(inst: &Instance) -> Option<Instance> {
    let count = |c: char| inst.dag().labels().iter().flat_map(|l| l.chars()).filter(|&x| x == c).count();
    (count('a') == count('b')).then(|| inst.clone())
}

/// `g` plus a path spelling `u` that precedes every vertex of `g`: the new
/// graph has a sort in `K` iff `g` has one in `u⁻¹K`.
pub fn quotient_reduce(g: &LabeledDag, u: &str) -> Result<LabeledDag, ReductionError> {
    let extra = Alphabet::spanning([u]).map_err(crate::dag::DagError::from)?;
    let alphabet = g.alphabet().union(&extra);
    let n = g.len();
    let mut labels = g.labels().to_vec();
    let mut edges = g.edges();
    let k = u.chars().count();
    labels.extend(u.chars().map(String::from));
    for i in 0..k {
        if i + 1 < k {
            edges.push((n + i, n + i + 1));
        }
        edges.extend((0..n).map(|v| (n + i, v)));
    }
    Ok(LabeledDag::new(alphabet, labels, &edges)?)
}
