//! A group directory: `group.txt` plus `subgroups/M*.txt`, loaded and analysed together.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::files::{digest, read_text, FileError, GroupFile, SubgroupFile};
use crate::perm::{analyze, ClassTable, GroupTable, PermError, DEFAULT_ORDER_CAP};
use crate::subgroups::{incidence_matrix_a, load_classes, IncidenceMatrices, SubgroupClass, SubgroupError};

#[derive(Debug, Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    File { path: String, source: FileError },
    #[error("{0}")]
    Perm(#[from] PermError),
    #[error("{0}")]
    Subgroup(#[from] SubgroupError),
    #[error("group file declares order {declared}, generators give {found}")]
    OrderMismatch { declared: usize, found: usize },
    #[error("{0}: cannot list subgroup directory")]
    Listing(String),
}

/// Everything computed from a group directory before any covering arguments.
pub struct GroupData {
    pub dir: PathBuf,
    pub group: GroupTable,
    pub classes: ClassTable,
    pub subgroups: Vec<SubgroupClass>,
    /// `(file name, sha256)` for the group file and every subgroup file, in load order.
    pub digests: Vec<(String, String)>,
}

/// Sort key putting `M2` before `M10`.
fn label_key(name: &str) -> (String, usize) {
    let digits: String = name.chars().filter(|c| c.is_ascii_digit()).collect();
    let alpha: String = name.chars().filter(|c| !c.is_ascii_digit()).collect();
    (alpha, digits.parse().unwrap_or(0))
}

pub fn load_group_file(path: &Path) -> Result<(GroupFile, GroupTable, String), DataError> {
    let text = read_text(path).map_err(|source| DataError::File {
        path: path.display().to_string(),
        source,
    })?;
    let file = GroupFile::parse(&text).map_err(|source| DataError::File {
        path: path.display().to_string(),
        source,
    })?;
    let g = GroupTable::close(file.name.clone(), file.generators.clone(), DEFAULT_ORDER_CAP)?;
    if g.order() != file.order {
        return Err(DataError::OrderMismatch {
            declared: file.order,
            found: g.order(),
        });
    }
    Ok((file, g, digest(&text)))
}

impl GroupData {
    pub fn load(dir: &Path) -> Result<GroupData, DataError> {
        let (_, group, gdigest) = load_group_file(&dir.join("group.txt"))?;
        let classes = analyze(&group);
        let sub_dir = dir.join("subgroups");
        let mut paths: Vec<PathBuf> = std::fs::read_dir(&sub_dir)
            .map_err(|_| DataError::Listing(sub_dir.display().to_string()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "txt"))
            .collect();
        paths.sort_by_key(|p| label_key(&p.file_stem().unwrap().to_string_lossy()));
        let mut digests = vec![("group.txt".to_string(), gdigest)];
        let mut files = Vec::new();
        for p in &paths {
            let text = read_text(p).map_err(|source| DataError::File {
                path: p.display().to_string(),
                source,
            })?;
            let f = SubgroupFile::parse(&text, group.degree()).map_err(|source| DataError::File {
                path: p.display().to_string(),
                source,
            })?;
            let name = format!("subgroups/{}", p.file_name().unwrap().to_string_lossy());
            digests.push((name, digest(&text)));
            files.push(f);
        }
        let subgroups = load_classes(&group, &files)?;
        Ok(GroupData {
            dir: dir.to_path_buf(),
            group,
            classes,
            subgroups,
            digests,
        })
    }

    pub fn incidence(&self) -> Result<IncidenceMatrices, SubgroupError> {
        let m = incidence_matrix_a(&self.classes, &self.subgroups)?;
        m.check_identity()?;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::label_key;

    #[test]
    fn labels_sort_numerically() {
        let mut v = vec!["M10", "M2", "M1"];
        v.sort_by_key(|s| label_key(s));
        assert_eq!(v, ["M1", "M2", "M10"]);
    }
}
