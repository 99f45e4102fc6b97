use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// Splits at commas that are not inside brackets.
pub fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut prev = ' ';
    for c in text.chars() {
        match c {
            '<' | '[' | '{' | '(' => depth += 1,
            '>' if prev == '-' => {}
            '>' | ']' | '}' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                prev = c;
                continue;
            }
            _ => {}
        }
        cur.push(c);
        prev = c;
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Parses `G`, `1`, `<x,y,..>` (generated subgroup) or `{x,y,..}`
/// (explicit element list, which must be closed).
pub fn parse_subgroup(group: &Group, text: &str) -> Result<Subgroup> {
    let t = text.trim();
    let inner = |open: char, close: char| t.strip_prefix(open).and_then(|r| r.strip_suffix(close));
    let elems = |body: &str| -> Result<Vec<u32>> {
        split_list(body)
            .iter()
            .map(|e| group.parse_element(e))
            .collect()
    };
    match t {
        "G" => Ok(Subgroup::whole(group)),
        "1" => Ok(Subgroup::trivial(group)),
        _ => {
            if let Some(body) = inner('<', '>') {
                Ok(Subgroup::generated(group, &elems(body)?))
            } else if let Some(body) = inner('{', '}').or_else(|| inner('[', ']')) {
                Subgroup::from_elements(group, elems(body)?)
            } else {
                Err(Error::Parse(format!(
                    "subgroup '{t}': expected G, 1, <generators> or {{elements}}"
                )))
            }
        }
    }
}

/// Parses `H1->H2`.
pub fn parse_pair(group: &Group, text: &str) -> Result<(Subgroup, Subgroup)> {
    let (a, b) = text
        .split_once("->")
        .ok_or_else(|| Error::Parse(format!("subgroup pair '{text}': expected H1->H2")))?;
    Ok((parse_subgroup(group, a)?, parse_subgroup(group, b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let d6 = Group::dihedral(6).unwrap();
        assert_eq!(parse_subgroup(&d6, "<r>").unwrap().len(), 6);
        assert_eq!(parse_subgroup(&d6, "<s>").unwrap().len(), 2);
        assert_eq!(parse_subgroup(&d6, "<sr, r^2>").unwrap().len(), 6);
        assert_eq!(parse_subgroup(&d6, "G").unwrap().len(), 12);
        assert_eq!(parse_subgroup(&d6, "1").unwrap().len(), 1);
        assert_eq!(parse_subgroup(&d6, "{1,r^3}").unwrap().len(), 2);
        assert!(parse_subgroup(&d6, "{1,r}").is_err());
        assert!(parse_subgroup(&d6, "r").is_err());
        let (a, b) = parse_pair(&d6, "<r>->G").unwrap();
        assert!(a.is_subgroup_of(&b));
    }

    #[test]
    fn list_splitting() {
        assert_eq!(split_list("<r>,<s, r^2>, G"), ["<r>", "<s, r^2>", "G"]);
        assert_eq!(split_list("<r>->G,<s>->G"), ["<r>->G", "<s>->G"]);
        assert!(split_list("").is_empty());
    }
}
