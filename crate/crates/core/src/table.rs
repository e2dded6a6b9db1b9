//! Block tables: one row per multipartition with its core, core charge,
//! weight and block number, rendered as JSON, CSV or Markdown.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocks::{decompose_blocks, Block};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_multipartitions, Modulus, Multicharge, Multipartition};

const COLUMNS: [&str; 5] = [
    "multipartition",
    "core",
    "core_charge",
    "weight",
    "block_id",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub multipartition: Multipartition,
    pub core: Multipartition,
    pub core_charge: Multicharge,
    pub weight: u64,
    /// Blocks are numbered from 1 in order of first appearance.
    pub block_id: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTable {
    pub n: u32,
    pub l: usize,
    pub e: Modulus,
    pub charge: Multicharge,
    pub rows: Vec<BlockRow>,
}

impl BlockTable {
    /// Rows follow the enumeration order of multipartitions.
    pub fn build(n: u32, l: usize, e: Modulus, s: &Multicharge) -> Result<Self> {
        let blocks = decompose_blocks(n, l, e, s)?;
        Ok(Self::from_blocks(n, l, e, s, &blocks))
    }

    /// Rows are sorted into enumeration order of the multipartitions.
    pub fn from_blocks(n: u32, l: usize, e: Modulus, s: &Multicharge, blocks: &[Block]) -> Self {
        let position: HashMap<Multipartition, usize> = enumerate_multipartitions(n, l)
            .enumerate()
            .map(|(i, mp)| (mp, i))
            .collect();
        let mut rows: Vec<BlockRow> = blocks
            .iter()
            .enumerate()
            .flat_map(|(id, block)| {
                block.members.iter().map(move |mp| BlockRow {
                    multipartition: mp.clone(),
                    core: block.core.core.clone(),
                    core_charge: block.core.charge.clone(),
                    weight: block.weight,
                    block_id: id + 1,
                })
            })
            .collect();
        rows.sort_by_key(|r| {
            position
                .get(&r.multipartition)
                .copied()
                .unwrap_or(usize::MAX)
        });
        BlockTable {
            n,
            l,
            e,
            charge: s.clone(),
            rows,
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
            Format::Md => Ok(self.to_markdown()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("tables serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    fn cells(row: &BlockRow) -> [String; 5] {
        [
            row.multipartition.to_json(),
            row.core.to_json(),
            row.core_charge.to_string(),
            row.weight.to_string(),
            row.block_id.to_string(),
        ]
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(COLUMNS).map_err(csv_err)?;
        for row in &self.rows {
            w.write_record(Self::cells(row)).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "| {} |", COLUMNS.join(" | "));
        let _ = writeln!(out, "|{}", " --- |".repeat(COLUMNS.len()));
        for row in &self.rows {
            let _ = writeln!(out, "| {} |", Self::cells(row).join(" | "));
        }
        out
    }
}

/// Parses the rows of a CSV table produced by [`BlockTable::to_csv`].
pub fn rows_from_csv(text: &str) -> Result<Vec<BlockRow>> {
    let parse_err = |e: &dyn std::fmt::Display| Error::Parse(e.to_string());
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| parse_err(&e))?;
    if header.iter().ne(COLUMNS) {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec.map_err(|e| parse_err(&e))?;
            let cell = |i: usize| rec.get(i).ok_or_else(|| Error::Parse("short row".into()));
            Ok(BlockRow {
                multipartition: Multipartition::from_json(cell(0)?)?,
                core: Multipartition::from_json(cell(1)?)?,
                core_charge: cell(2)?.parse()?,
                weight: cell(3)?.parse().map_err(|e| parse_err(&e))?,
                block_id: cell(4)?.parse().map_err(|e| parse_err(&e))?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_one() -> BlockTable {
        BlockTable::build(
            4,
            2,
            Modulus::new(4).unwrap(),
            &Multicharge::new(vec![0, 1]),
        )
        .unwrap()
    }

    #[test]
    fn rows_follow_enumeration() {
        let t = table_one();
        assert_eq!(t.rows.len(), 20);
        let listed: Vec<_> = t.rows.iter().map(|r| r.multipartition.clone()).collect();
        let expected: Vec<_> = enumerate_multipartitions(4, 2).collect();
        assert_eq!(listed, expected);
        assert_eq!(t.rows[0].block_id, 1);
    }

    #[test]
    fn json_round_trip() {
        let t = table_one();
        assert_eq!(BlockTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn csv_round_trip() {
        let t = table_one();
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("multipartition,core,core_charge,weight,block_id\n"));
        assert_eq!(rows_from_csv(&csv).unwrap(), t.rows);
    }

    #[test]
    fn markdown_layout() {
        let md = table_one().to_markdown();
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines.len(), 22);
        assert_eq!(
            lines[0],
            "| multipartition | core | core_charge | weight | block_id |"
        );
        assert!(md.contains("| [[3],[1]] | [[],[1,1]] | [-1,2] | 1 |"));
    }

    #[test]
    fn format_names() {
        assert_eq!("MD".parse::<Format>().unwrap(), Format::Md);
        assert!("xml".parse::<Format>().is_err());
    }
}
