//! Parsing of class expressions and ring operands.
//!
//! An atom is `p[..]`, `s[..]`, `e[..]` or `h[..]` with a weakly decreasing
//! list of positive parts, `cK` for `e[K]`, or `chK` for `p[K]/K!`. Ring
//! operands also accept `sigma[..]` and `a[..]`. Expressions are sums of
//! atoms with optional rational coefficients: `2*s[2,1] - 1/2*p[3]`.

use bcchow::arakelov::{normal_form, ArakelovElem, HatPoly};
use bcchow::rat::{factorial, from_bigint, parse_rat, Rat};
use bcchow::{Basis, Partition, SymF};
use num_traits::One;

#[derive(Clone, Debug, PartialEq)]
enum Atom {
    Class(SymF),
    Sigma(Partition),
    Arch(Partition),
}

fn err(text: &str, reason: impl Into<String>) -> String {
    format!("cannot parse `{text}`: {}", reason.into())
}

fn parse_partition(inner: &str, whole: &str) -> Result<Partition, String> {
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|p| match p.trim().parse::<u32>() {
            Ok(0) => Err(err(whole, "parts must be positive")),
            Ok(v) => Ok(v),
            Err(_) => Err(err(whole, format!("`{}` is not a positive integer", p.trim()))),
        })
        .collect::<Result<Vec<u32>, String>>()?;
    Partition::new(parts).map_err(|e| err(whole, e.to_string()))
}

fn parse_index(digits: &str, whole: &str) -> Result<u32, String> {
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(err(whole, "expected a degree after the prefix"));
    }
    digits.parse().map_err(|_| err(whole, "degree too large"))
}

fn parse_atom(text: &str) -> Result<Atom, String> {
    let t = text.trim();
    if let Some(open) = t.find('[') {
        if !t.ends_with(']') {
            return Err(err(t, "missing closing `]`"));
        }
        let lambda = parse_partition(&t[open + 1..t.len() - 1], t)?;
        return match &t[..open] {
            "sigma" => Ok(Atom::Sigma(lambda)),
            "a" => Ok(Atom::Arch(lambda)),
            letter => {
                let basis: Basis = letter.parse().map_err(|_| err(t, format!("unknown basis `{letter}`")))?;
                Ok(Atom::Class(SymF::basis_elem(basis, lambda)))
            }
        };
    }
    if let Some(k) = t.strip_prefix("ch") {
        let k = parse_index(k, t)?;
        let c = Rat::one() / from_bigint(factorial(k));
        return Ok(Atom::Class(SymF::term(Basis::P, Partition::row(k), c)));
    }
    if let Some(k) = t.strip_prefix('c') {
        let k = parse_index(k, t)?;
        return Ok(Atom::Class(SymF::basis_elem(Basis::E, Partition::row(k))));
    }
    Err(err(t, "expected p[..], s[..], e[..], h[..], cK or chK"))
}

/// Splits at top-level `+` and `-`, returning signed terms.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>, String> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !current.trim().ends_with('*') {
            if !current.trim().is_empty() {
                terms.push((negative, current.trim().to_string()));
            } else if !terms.is_empty() || negative {
                return Err(err(text, "dangling sign"));
            }
            negative = ch == '-';
            current.clear();
        } else {
            current.push(ch);
        }
    }
    if current.trim().is_empty() {
        return Err(err(text, "empty term"));
    }
    terms.push((negative, current.trim().to_string()));
    Ok(terms)
}

fn parse_terms(text: &str) -> Result<Vec<(Rat, Atom)>, String> {
    split_terms(text)?
        .into_iter()
        .map(|(negative, term)| {
            let (coeff, atom) = match term.split_once('*') {
                Some((c, a)) => (parse_rat(c.trim()).ok_or_else(|| err(&term, "bad coefficient"))?, a),
                None => (Rat::one(), term.as_str()),
            };
            let coeff = if negative { -coeff } else { coeff };
            Ok((coeff, parse_atom(atom)?))
        })
        .collect()
}

/// A single atom naming a symmetric function.
pub fn parse_class_expr(text: &str) -> Result<SymF, String> {
    match parse_atom(text)? {
        Atom::Class(f) => Ok(f),
        _ => Err(err(text, "ring classes are not symmetric functions")),
    }
}

/// A linear combination of symmetric-function atoms.
pub fn parse_sym_expr(text: &str) -> Result<SymF, String> {
    let mut out: Option<SymF> = None;
    for (c, atom) in parse_terms(text)? {
        let Atom::Class(f) = atom else {
            return Err(err(text, "ring classes are not symmetric functions"));
        };
        match &mut out {
            Some(acc) => acc.add_scaled(&f, &c),
            None => out = Some(f.scale(&c)),
        }
    }
    Ok(out.expect("at least one term"))
}

/// An element of `CH(Ḡ(r, r + s))`: symmetric-function atoms are read as
/// polynomials in `ĉ(Q̄)` and straightened.
pub fn parse_ring_operand(text: &str, r: u32, s: u32) -> Result<ArakelovElem, String> {
    let mut out = ArakelovElem::zero(r, s).map_err(|e| e.to_string())?;
    for (c, atom) in parse_terms(text)? {
        let x = match atom {
            Atom::Sigma(l) => ArakelovElem::sigma(&l, r, s),
            Atom::Arch(l) => ArakelovElem::arch_schur(&l, r, s),
            Atom::Class(f) => HatPoly::new(&f, r, s).map(|p| normal_form(&p)),
        }
        .map_err(|e| err(text, e.to_string()))?;
        out.add_scaled(&x, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bcchow::rat::{frac, int};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(parse_class_expr("p[3,1]").unwrap(), SymF::basis_elem(Basis::P, p(&[3, 1])));
        assert_eq!(parse_class_expr("c3").unwrap(), SymF::basis_elem(Basis::E, p(&[3])));
        assert_eq!(parse_class_expr("ch3").unwrap(), SymF::term(Basis::P, p(&[3]), frac(1, 6)));
        assert_eq!(parse_class_expr(" s[2, 1] ").unwrap(), SymF::basis_elem(Basis::S, p(&[2, 1])));
        assert_eq!(parse_class_expr("h[]").unwrap(), SymF::one(Basis::H));
    }

    #[test]
    fn malformed_atoms() {
        for bad in ["s[1,2]", "s[2,0]", "q[1]", "s[1", "c", "chx", "p[a]", "", "sigma[1]"] {
            assert!(parse_class_expr(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn combinations() {
        let f = parse_sym_expr("2*s[2] - 1/2 * s[1,1] + s[2]").unwrap();
        assert_eq!(f, SymF::from_terms(Basis::S, [(p(&[2]), int(3)), (p(&[1, 1]), frac(-1, 2))]));
        assert_eq!(parse_sym_expr("-p[1]").unwrap(), SymF::term(Basis::P, p(&[1]), int(-1)));
        assert_eq!(parse_sym_expr("-1/2*p[1]").unwrap(), SymF::term(Basis::P, p(&[1]), frac(-1, 2)));
        assert!(parse_sym_expr("p[1] +").is_err());
        assert!(parse_sym_expr("p[1] + + p[2]").is_err());
        assert!(parse_sym_expr("x*p[1]").is_err());
    }

    #[test]
    fn ring_operands() {
        let x = parse_ring_operand("sigma[1] + 1/2*a[1]", 1, 1).unwrap();
        assert_eq!(x.to_string(), "sigma[1] + 1/2 * a[1]");
        assert_eq!(parse_ring_operand("e[1,1]", 1, 1).unwrap().to_string(), "a[1]");
        assert!(parse_ring_operand("sigma[2]", 1, 1).is_err());
    }
}
