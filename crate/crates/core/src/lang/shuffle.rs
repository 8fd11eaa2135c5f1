use std::collections::BTreeSet;

use super::LangError;

/// All interleavings of `u` and `v`.
pub fn shuffle_pair(u: &str, v: &str, cap: usize) -> Result<BTreeSet<String>, LangError> {
    shuffle_tuple(&[u, v], cap)
}

/// All interleavings of the given words. Refuses when the total length
/// exceeds `cap`.
pub fn shuffle_tuple(words: &[&str], cap: usize) -> Result<BTreeSet<String>, LangError> {
    let chars: Vec<Vec<char>> = words.iter().map(|w| w.chars().collect()).collect();
    let total: usize = chars.iter().map(Vec::len).sum();
    if total > cap {
        return Err(LangError::CapExceeded {
            what: "shuffle length",
            limit: cap,
        });
    }
    let mut out = BTreeSet::new();
    let mut pos = vec![0; chars.len()];
    let mut buf = String::with_capacity(total);
    fn go(
        chars: &[Vec<char>],
        pos: &mut [usize],
        buf: &mut String,
        out: &mut BTreeSet<String>,
        seen: &mut std::collections::HashSet<(Vec<usize>, String)>,
    ) {
        if !seen.insert((pos.to_vec(), buf.clone())) {
            return;
        }
        let mut done = true;
        for i in 0..chars.len() {
            if pos[i] < chars[i].len() {
                done = false;
                buf.push(chars[i][pos[i]]);
                pos[i] += 1;
                go(chars, pos, buf, out, seen);
                pos[i] -= 1;
                buf.pop();
            }
        }
        if done {
            out.insert(buf.clone());
        }
    }
    let mut seen = std::collections::HashSet::new();
    go(&chars, &mut pos, &mut buf, &mut out, &mut seen);
    Ok(out)
}
