//! Line-oriented text format:
//!
//! ```text
//! # comment
//! dim 4
//! basis x1 x2 x3 z
//! bracket x1 x2 = 1 x3
//! bracket x1 x3 = -1 x2
//! bracket x2 x3 = z
//! form x1 z = 1
//! ```
//!
//! Omitted brackets are zero and the opposite orientation is implied.
//! Form entries are completed symmetrically; a single `= 0` entry keeps a
//! zero form distinct from no form.

use std::collections::HashMap;
use std::fmt::Write;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::lie::{LieAlgebra, LieAlgebraBuilder};
use crate::linalg::{format_scalar, parse_scalar, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: LieAlgebra,
    pub form: Option<BilinearForm>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Labels<'a> {
    index: HashMap<&'a str, usize>,
}

impl Labels<'_> {
    fn get(&self, name: &str, line: usize) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| err(line, format!("unknown label '{name}'")))
    }
}

fn split_pair(rest: &str, line: usize, what: &str) -> Result<(String, String, String)> {
    let (lhs, rhs) = rest
        .split_once('=')
        .ok_or_else(|| err(line, format!("{what} line needs '='")))?;
    let names: Vec<&str> = lhs.split_whitespace().collect();
    if names.len() != 2 {
        return Err(err(line, format!("{what} line needs exactly two labels before '='")));
    }
    Ok((names[0].to_string(), names[1].to_string(), rhs.trim().to_string()))
}

pub fn parse(text: &str) -> Result<AlgebraFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, first) = lines.next().ok_or_else(|| err(1, "empty file, expected 'dim N'"))?;
    let dim: usize = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", n] => n
            .parse()
            .map_err(|_| err(ln, format!("invalid dimension '{n}'")))?,
        _ => return Err(err(ln, "first line must be 'dim N'")),
    };

    let mut labels: Option<Vec<String>> = None;
    let mut brackets: Vec<(usize, String, String, String)> = Vec::new();
    let mut forms: Vec<(usize, String, String, String)> = Vec::new();
    for (ln, line) in lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "basis" => {
                if labels.is_some() {
                    return Err(err(ln, "duplicate 'basis' line"));
                }
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.len() != dim {
                    return Err(err(ln, format!("expected {dim} labels, found {}", names.len())));
                }
                for (i, n) in names.iter().enumerate() {
                    if !valid_label(n) {
                        return Err(err(ln, format!("invalid label '{n}'")));
                    }
                    if names[..i].contains(n) {
                        return Err(err(ln, format!("duplicate label '{n}'")));
                    }
                }
                labels = Some(names);
            }
            "bracket" => {
                let (a, b, rhs) = split_pair(rest, ln, "bracket")?;
                brackets.push((ln, a, b, rhs));
            }
            "form" => {
                let (a, b, rhs) = split_pair(rest, ln, "form")?;
                forms.push((ln, a, b, rhs));
            }
            "dim" => return Err(err(ln, "duplicate 'dim' line")),
            other => return Err(err(ln, format!("unknown keyword '{other}'"))),
        }
    }
    let labels = match labels {
        Some(l) => l,
        None if dim == 0 => Vec::new(),
        None => return Err(err(ln, "missing 'basis' line")),
    };
    let lookup = Labels {
        index: labels.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect(),
    };

    let mut b = LieAlgebraBuilder::new(labels.clone());
    let mut defined: HashMap<(usize, usize), usize> = HashMap::new();
    for (ln, a, c, rhs) in &brackets {
        let (i, j) = (lookup.get(a, *ln)?, lookup.get(c, *ln)?);
        if i == j {
            return Err(err(*ln, format!("bracket of '{a}' with itself")));
        }
        let key = (i.min(j), i.max(j));
        if let Some(prev) = defined.insert(key, *ln) {
            return Err(err(*ln, format!("bracket [{a}, {c}] already defined on line {prev}")));
        }
        if rhs.is_empty() || rhs == "0" {
            continue;
        }
        let mut seen = Vec::new();
        for term in rhs.split(',') {
            let parts: Vec<&str> = term.split_whitespace().collect();
            let (coef, name) = match parts.as_slice() {
                [name] => (Scalar::from_integer(1.into()), *name),
                [c, name] => (
                    parse_scalar(c).map_err(|e| err(*ln, format!("bad coefficient '{c}': {e}")))?,
                    *name,
                ),
                _ => return Err(err(*ln, format!("cannot parse term '{}'", term.trim()))),
            };
            let k = lookup.get(name, *ln)?;
            if seen.contains(&k) {
                return Err(err(*ln, format!("label '{name}' repeated in one bracket")));
            }
            seen.push(k);
            if !coef.is_zero() {
                b.add(i, j, k, coef);
            }
        }
    }

    let form = if forms.is_empty() {
        None
    } else {
        let mut g = Matrix::zeros(dim, dim);
        let mut set: HashMap<(usize, usize), (usize, Scalar)> = HashMap::new();
        for (ln, a, c, rhs) in &forms {
            let (i, j) = (lookup.get(a, *ln)?, lookup.get(c, *ln)?);
            let v = parse_scalar(rhs).map_err(|e| err(*ln, format!("bad form value '{rhs}': {e}")))?;
            let key = (i.min(j), i.max(j));
            if let Some((prev, old)) = set.get(&key) {
                if *old != v {
                    return Err(err(
                        *ln,
                        format!("form entry ({a}, {c}) conflicts with line {prev}"),
                    ));
                }
                continue;
            }
            set.insert(key, (*ln, v.clone()));
            g = g.add(&Matrix::from_fn(dim, dim, |r, s| {
                if (r, s) == (i, j) || (r, s) == (j, i) {
                    v.clone()
                } else {
                    Scalar::zero()
                }
            }));
        }
        Some(BilinearForm::new(g).expect("symmetric by construction"))
    };
    Ok(AlgebraFile {
        algebra: b.build(),
        form,
    })
}

pub fn serialize(l: &LieAlgebra, form: Option<&BilinearForm>) -> String {
    let n = l.dim();
    let names = l.labels();
    let mut s = String::new();
    if let Some(p) = l.provenance() {
        writeln!(s, "# {p}").unwrap();
    }
    writeln!(s, "dim {n}").unwrap();
    if n > 0 {
        writeln!(s, "basis {}", names.join(" ")).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            let p = l.bracket_basis(i, j);
            if p.is_empty() {
                continue;
            }
            let terms: Vec<String> = p
                .iter()
                .map(|(k, c)| format!("{} {}", format_scalar(c), names[*k]))
                .collect();
            writeln!(s, "bracket {} {} = {}", names[i], names[j], terms.join(", ")).unwrap();
        }
    }
    if let Some(f) = form {
        if f.is_zero() && n > 0 {
            writeln!(s, "form {} {} = 0", names[0], names[0]).unwrap();
        }
        for i in 0..n {
            for j in i..n {
                let v = f.at(i, j);
                if !v.is_zero() {
                    writeln!(s, "form {} {} = {}", names[i], names[j], format_scalar(v)).unwrap();
                }
            }
        }
    }
    s
}
