use serde::Serialize;

use super::GroupPresentation;
use crate::lang::LangError;
use crate::solvers::SolveError;

/// Result of dropping insertions. `kept` lists the surviving insertion
/// indices in increasing order and always starts with 0. `words` are the
/// merged words; `words[t]` is followed by insertion `after[t]`, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompressResult {
    pub kept: Vec<usize>,
    pub words: Vec<String>,
    pub after: Vec<Option<usize>>,
}

impl CompressResult {
    /// The compressed word with the kept insertions in place.
    pub fn interleave(&self, ins: &[String]) -> String {
        let mut out = ins[0].clone();
        for (w, a) in self.words.iter().zip(&self.after) {
            out.push_str(w);
            if let Some(j) = a {
                out.push_str(&ins[*j]);
            }
        }
        out
    }
}

/// Given `x_0 w_0 x_1 w_1 ⋯ w_{n-1} x_n`, drop insertions while both the
/// image of the whole word and the product of the insertions are preserved.
///
/// Block `k` is `w_k x_{k+1}`. The pair `(i, j)` is colored by the images of
/// `w_i⋯w_{j-1}`, of blocks `i..j` and of `x_{i+1}⋯x_j`. All three are
/// products over consecutive blocks, so an equally colored triangle
/// `l < m < r` forces every coordinate to be the identity: the insertions
/// of blocks `l..r` can go and their words merge into one block. Triangles
/// are found by scanning the whole pair table; the loop stops when none is
/// left. `x_0` belongs to no block and always stays.
pub fn insertion_compress(gp: &GroupPresentation, w: &[String], ins: &[String]) -> Result<CompressResult, SolveError> {
    if ins.len() != w.len() + 1 {
        return Err(SolveError::Precondition("need one more insertion than words".into()));
    }
    let eval = |s: &str| -> Result<usize, SolveError> {
        gp.eval(s).ok_or_else(|| {
            let c = s.chars().find(|&c| !gp.alphabet().contains(c)).expect("unknown symbol");
            SolveError::Lang(LangError::UnknownSymbol(c))
        })
    };
    eval(&ins[0])?;
    let mut words: Vec<usize> = w.iter().map(|s| eval(s)).collect::<Result<_, _>>()?;
    let mut inserts: Vec<usize> = ins[1..].iter().map(|s| eval(s)).collect::<Result<_, _>>()?;
    let mut after: Vec<Option<usize>> = (1..ins.len()).map(Some).collect();
    let mut text: Vec<String> = w.to_vec();
    while let Some((l, r)) = find_triangle(gp, &words, &inserts) {
        let merged = text[l..r].concat();
        let image = words[l..r].iter().fold(gp.identity(), |x, &y| gp.mul(x, y));
        text.splice(l..r, [merged]);
        words.splice(l..r, [image]);
        inserts.splice(l..r, [gp.identity()]);
        after.splice(l..r, [None]);
    }
    let kept = std::iter::once(0).chain(after.iter().flatten().copied()).collect();
    Ok(CompressResult {
        kept,
        words: text,
        after,
    })
}

fn find_triangle(gp: &GroupPresentation, words: &[usize], inserts: &[usize]) -> Option<(usize, usize)> {
    let n = words.len();
    // color[i][j] for 0 <= i < j <= n
    let mut color = vec![vec![(0, 0, 0); n + 1]; n + 1];
    for i in 0..n {
        let (mut wp, mut vp, mut xp) = (gp.identity(), gp.identity(), gp.identity());
        for j in i + 1..=n {
            wp = gp.mul(wp, words[j - 1]);
            vp = gp.mul(gp.mul(vp, words[j - 1]), inserts[j - 1]);
            xp = gp.mul(xp, inserts[j - 1]);
            color[i][j] = (wp, vp, xp);
        }
    }
    for l in 0..=n {
        for r in l + 2..=n {
            for m in l + 1..r {
                if color[l][m] == color[m][r] && color[m][r] == color[l][r] {
                    return Some((l, r));
                }
            }
        }
    }
    None
}
