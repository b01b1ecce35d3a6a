use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Parse the text group format: a `degree n` line followed by one generator
/// per line in 0-based cycle notation. Blank lines and `#` comments are
/// skipped.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| parse_err(format!("expected `degree n`, found {line:?}")))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("bad degree {:?}", rest.trim())))?;
                if n == 0 {
                    return Err(parse_err("degree must be at least 1".into()));
                }
                degree = Some(n);
            }
            Some(n) => {
                let g = Perm::parse_cycles(n, line).map_err(|e| parse_err(e.to_string()))?;
                gens.push(g);
            }
        }
    }
    let n = degree.ok_or(Error::Parse {
        line: 0,
        message: "missing `degree` line".into(),
    })?;
    PermGroup::from_generators(n, &gens)
}

/// Render a group in the text format, with an optional comment line.
pub fn write_group_file(group: &PermGroup, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("degree {}\n", group.degree()));
    for g in group.generators() {
        out.push_str(&format!("{g}\n"));
    }
    out
}

/// Split a text holding several groups, each starting at a `degree` line;
/// comment lines directly above a group are kept with it.
pub fn split_group_files(text: &str) -> Vec<String> {
    let mut chunks: Vec<String> = Vec::new();
    let mut pending = String::new();
    let mut current: Option<String> = None;
    for line in text.lines() {
        let t = line.trim();
        if t.starts_with("degree") {
            if let Some(c) = current.take() {
                chunks.push(c);
            }
            current = Some(std::mem::take(&mut pending) + line + "\n");
        } else if t.starts_with('#') || t.is_empty() {
            pending.push_str(line);
            pending.push('\n');
        } else if let Some(c) = current.as_mut() {
            c.push_str(&pending);
            pending.clear();
            c.push_str(line);
            c.push('\n');
        }
    }
    if let Some(c) = current {
        chunks.push(c);
    }
    chunks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = parse_group_file("# S4\ndegree 4\n(0 1 2 3)\n\n(0 1)  # transposition\n").unwrap();
        assert_eq!(g.order_u64(), Some(24));
        let text = write_group_file(&g, Some("S4"));
        assert_eq!(parse_group_file(&text).unwrap().order_u64(), Some(24));
        assert_eq!(parse_group_file("degree 5\n").unwrap().order_u64(), Some(1));
        assert!(matches!(
            parse_group_file("degree 3\n(0 5)\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_group_file("(0 1)\n").is_err());
    }

    #[test]
    fn splitting() {
        let text = "# a\ndegree 2\n(0 1)\n# b\ndegree 3\n(0 1 2)\n";
        let parts = split_group_files(text);
        assert_eq!(parts.len(), 2);
        assert!(parts[1].starts_with("# b"));
    }
}
