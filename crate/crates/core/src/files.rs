//! Line-based text formats for group and subgroup generator files.
//!
//! ```text
//! # comment
//! group U3(3) degree 28 order 6048
//! gen (1,2,3)(4,5)
//! ```
//!
//! ```text
//! subgroup M2 of U3(3) order 168 structure "L2(7)"
//! gen (1,5,9)
//! ```

use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::perm::{parse_permutation, PermError, Permutation};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Perm { line: usize, source: PermError },
    #[error("missing header line")]
    MissingHeader,
}

fn syntax(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Syntax { line, msg: msg.into() }
}

pub fn read_text(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Hex SHA-256 of a file's text.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Meaningful lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile, FileError> {
        let mut header: Option<(String, usize, usize)> = None;
        let mut generators = Vec::new();
        for (line, l) in content_lines(text) {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks[0] {
                "group" => {
                    if toks.len() != 6 || toks[2] != "degree" || toks[4] != "order" {
                        return Err(syntax(line, "expected `group <name> degree <d> order <n>`"));
                    }
                    let degree = toks[3].parse().map_err(|_| syntax(line, "bad degree"))?;
                    let order = toks[5].parse().map_err(|_| syntax(line, "bad order"))?;
                    header = Some((toks[1].to_string(), degree, order));
                }
                "gen" => {
                    let (_, degree, _) = header.as_ref().ok_or(FileError::MissingHeader)?;
                    let p =
                        parse_permutation(l[3..].trim(), *degree).map_err(|source| FileError::Perm { line, source })?;
                    generators.push(p);
                }
                other => return Err(syntax(line, format!("unknown record `{other}`"))),
            }
        }
        let (name, degree, order) = header.ok_or(FileError::MissingHeader)?;
        if generators.is_empty() {
            return Err(syntax(0, "no generators"));
        }
        Ok(GroupFile {
            name,
            degree,
            order,
            generators,
        })
    }

    pub fn load(path: &Path) -> Result<GroupFile, FileError> {
        GroupFile::parse(&read_text(path)?)
    }

    pub fn render(&self) -> String {
        let mut s = format!("group {} degree {} order {}\n", self.name, self.degree, self.order);
        for g in &self.generators {
            s.push_str(&format!("gen {}\n", g.to_cycle_string()));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupFile {
    pub label: String,
    pub group: String,
    pub order: usize,
    pub structure: String,
    pub generators: Vec<Permutation>,
}

impl SubgroupFile {
    /// Parses a subgroup file; permutations are read at `degree`.
    pub fn parse(text: &str, degree: usize) -> Result<SubgroupFile, FileError> {
        let mut header: Option<(String, String, usize, String)> = None;
        let mut generators = Vec::new();
        for (line, l) in content_lines(text) {
            let first = l.split_whitespace().next().unwrap_or("");
            match first {
                "subgroup" => {
                    let (head, structure) = match l.find("structure") {
                        Some(pos) => {
                            let rest = l[pos + "structure".len()..].trim();
                            let s = rest
                                .strip_prefix('"')
                                .and_then(|r| r.strip_suffix('"'))
                                .ok_or_else(|| syntax(line, "structure must be quoted"))?;
                            (&l[..pos], s.to_string())
                        }
                        None => (l, String::new()),
                    };
                    let toks: Vec<&str> = head.split_whitespace().collect();
                    if toks.len() != 6 || toks[2] != "of" || toks[4] != "order" {
                        return Err(syntax(
                            line,
                            "expected `subgroup <label> of <group> order <n> structure \"..\"`",
                        ));
                    }
                    let order = toks[5].parse().map_err(|_| syntax(line, "bad order"))?;
                    header = Some((toks[1].to_string(), toks[3].to_string(), order, structure));
                }
                "gen" => {
                    if header.is_none() {
                        return Err(FileError::MissingHeader);
                    }
                    let p =
                        parse_permutation(l[3..].trim(), degree).map_err(|source| FileError::Perm { line, source })?;
                    generators.push(p);
                }
                other => return Err(syntax(line, format!("unknown record `{other}`"))),
            }
        }
        let (label, group, order, structure) = header.ok_or(FileError::MissingHeader)?;
        Ok(SubgroupFile {
            label,
            group,
            order,
            structure,
            generators,
        })
    }

    pub fn load(path: &Path, degree: usize) -> Result<SubgroupFile, FileError> {
        SubgroupFile::parse(&read_text(path)?, degree)
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "subgroup {} of {} order {} structure \"{}\"\n",
            self.label, self.group, self.order, self.structure
        );
        for g in &self.generators {
            s.push_str(&format!("gen {}\n", g.to_cycle_string()));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_file_parses_with_comments() {
        let text = "# S3\ngroup S3 degree 3 order 6\n\ngen (1,2)\ngen (1,2,3)\n";
        let f = GroupFile::parse(text).unwrap();
        assert_eq!(f.name, "S3");
        assert_eq!(f.generators.len(), 2);
        assert_eq!(GroupFile::parse(&f.render()).unwrap(), f);
    }

    #[test]
    fn group_file_reports_line_numbers() {
        let text = "group S3 degree 3 order 6\ngen (1,2)\ngen (1,5)\n";
        match GroupFile::parse(text) {
            Err(FileError::Perm { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let text = "group S3 degree 3\n";
        assert!(matches!(GroupFile::parse(text), Err(FileError::Syntax { line: 1, .. })));
        assert!(matches!(GroupFile::parse("gen (1,2)\n"), Err(FileError::MissingHeader)));
    }

    #[test]
    fn subgroup_file_parses_structure() {
        let text = "subgroup M2 of U3(3) order 168 structure \"L2(7)\"\ngen (1,2)\n";
        let f = SubgroupFile::parse(text, 28).unwrap();
        assert_eq!(f.label, "M2");
        assert_eq!(f.group, "U3(3)");
        assert_eq!(f.structure, "L2(7)");
        assert_eq!(f.order, 168);
        assert_eq!(SubgroupFile::parse(&f.render(), 28).unwrap(), f);
    }
}
