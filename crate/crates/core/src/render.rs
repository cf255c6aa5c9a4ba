//! Text rendering shared by algebra elements and module vectors. The output
//! is accepted by the expression parser.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Generator, Partition};
use crate::poly::CentralPoly;

/// Writes `L[a]^k*L[b]...` for the parts of a partition, or nothing for `0̄`.
pub(crate) fn push_block(out: &mut Vec<String>, block: &Partition, make: fn(i64) -> Generator) {
    let parts = block.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let g = make(parts[i]);
        if j - i == 1 {
            out.push(g.to_string());
        } else {
            out.push(format!("{g}^{}", j - i));
        }
        i = j;
    }
}

/// Joins `coefficient * body` terms into a signed sum. An empty body marks a
/// pure scalar term.
pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (&'a CentralPoly, String)>) -> String {
    let mut out = String::new();
    for (coeff, body) in terms {
        let (neg, text) = match coeff.coeffs() {
            [c] => {
                let neg = c.is_negative();
                let abs = c.abs();
                let text = match (body.is_empty(), abs.is_one()) {
                    (true, _) => abs.to_string(),
                    (false, true) => body,
                    (false, false) => format!("{abs}*{body}"),
                };
                (neg, text)
            }
            cs if cs.iter().filter(|c| !c.is_zero()).count() == 1 => {
                let neg = coeff.leading().is_some_and(Signed::is_negative);
                let abs = if neg { -coeff } else { coeff.clone() };
                let text = if body.is_empty() {
                    abs.to_string()
                } else {
                    format!("{abs}*{body}")
                };
                (neg, text)
            }
            _ if body.is_empty() => (false, format!("({coeff})")),
            _ => (false, format!("({coeff})*{body}")),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
