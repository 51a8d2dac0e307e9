//! Plain-text tableau files and ASCII / LaTeX rendering.
//!
//! File format: one row per line, row 0 first, labels as space-separated
//! decimal naturals. `#` starts a comment and blank lines are ignored, so an
//! empty file is the empty tableau.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::analysis::IntersectionReport;
use crate::fused::CommutationReport;
use crate::insertion::Trail;
use crate::tableau::{BoxCoord, Label, Tableau, TableauError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: `{token}` is not a label")]
    BadLabel { line: usize, token: String },
    #[error(transparent)]
    Invalid(#[from] TableauError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    /// First row drawn at the bottom.
    #[default]
    French,
    /// First row drawn at the top.
    English,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Ascii,
    Latex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Annotate {
    #[default]
    None,
    Trails,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub convention: Convention,
    pub format: OutputFormat,
    pub annotate: Annotate,
}

/// Parses the tableau file format (row 0 on the first non-blank line).
pub fn parse_tableau(text: &str) -> Result<Tableau, ParseError> {
    Ok(Tableau::from_rows(parse_lines(text)?)?)
}

/// Parses text laid out in `convention` order, e.g. the output of [`render`]
/// in ASCII without annotation.
pub fn parse_rendered(text: &str, convention: Convention) -> Result<Tableau, ParseError> {
    let mut rows = parse_lines(text)?;
    if convention == Convention::French {
        rows.reverse();
    }
    Ok(Tableau::from_rows(rows)?)
}

fn parse_lines(text: &str) -> Result<Vec<Vec<Label>>, ParseError> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Label>().map_err(|_| ParseError::BadLabel {
                    line: idx + 1,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !row.is_empty() {
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Serializes in the file format.
pub fn to_file_format(t: &Tableau) -> String {
    let mut out = String::new();
    for row in t.rows() {
        out.push_str(&join(row.iter()));
        out.push('\n');
    }
    out
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Compact one-line form, rows separated by `/`, row 0 first.
pub fn inline(t: &Tableau) -> String {
    t.rows()
        .iter()
        .map(|row| join(row.iter()))
        .collect::<Vec<_>>()
        .join(" / ")
}

#[derive(Clone, Copy, Default)]
struct Cell {
    label: Option<Label>,
    on_row_trail: bool,
    on_col_trail: bool,
}

fn cell_text(cell: &Cell, format: OutputFormat) -> String {
    match format {
        OutputFormat::Ascii => {
            let mut s = String::new();
            if cell.on_col_trail {
                s.push('|');
            }
            if cell.on_row_trail {
                s.push('_');
            }
            match cell.label {
                Some(v) => s.push_str(&v.to_string()),
                None => s.push('∅'),
            }
            s
        }
        OutputFormat::Latex => {
            let mut s = match cell.label {
                Some(v) => v.to_string(),
                None => "\\emptyset".to_string(),
            };
            if cell.on_row_trail {
                s = format!("\\underline{{{s}}}");
            }
            if cell.on_col_trail {
                s = format!("\\mid\\!\\!{s}");
            }
            s
        }
    }
}

/// Renders a tableau without annotation.
pub fn render(t: &Tableau, opts: &RenderOptions) -> String {
    render_annotated(t, opts, None, None)
}

/// Renders `t` with the boxes of the given trails marked: row-trail boxes are
/// underlined (`_` in ASCII), column-trail boxes get a leading bar, and each
/// trail's new box appears as `∅`. Marks are drawn only when
/// `opts.annotate` is [`Annotate::Trails`].
pub fn render_annotated(
    t: &Tableau,
    opts: &RenderOptions,
    row_trail: Option<&Trail>,
    col_trail: Option<&Trail>,
) -> String {
    let mut cells: HashMap<BoxCoord, Cell> = t
        .boxes()
        .map(|(b, v)| {
            (
                b,
                Cell {
                    label: Some(v),
                    ..Cell::default()
                },
            )
        })
        .collect();
    if opts.annotate == Annotate::Trails {
        for (trail, is_row) in [(row_trail, true), (col_trail, false)] {
            for b in trail.into_iter().flat_map(Trail::boxes) {
                let cell = cells.entry(b).or_default();
                if is_row {
                    cell.on_row_trail = true;
                } else {
                    cell.on_col_trail = true;
                }
            }
        }
    }
    let height = cells.keys().map(|b| b.row + 1).max().unwrap_or(0);
    let mut lines: Vec<Vec<String>> = (0..height)
        .map(|r| {
            let width = cells
                .keys()
                .filter(|b| b.row == r)
                .map(|b| b.col + 1)
                .max()
                .unwrap_or(0);
            (0..width)
                .map(|c| {
                    cells
                        .get(&BoxCoord::new(r, c))
                        .map_or_else(String::new, |cell| cell_text(cell, opts.format))
                })
                .collect()
        })
        .collect();
    if opts.convention == Convention::French {
        lines.reverse();
    }
    match opts.format {
        OutputFormat::Ascii => {
            let width = lines
                .iter()
                .flatten()
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0);
            let mut out = String::new();
            for line in lines {
                let padded: Vec<String> = line.iter().map(|s| format!("{s:>width$}")).collect();
                out.push_str(padded.join(" ").trim_end());
                out.push('\n');
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{ytableau}\n");
            let n = lines.len();
            for (k, line) in lines.iter().enumerate() {
                out.push_str(&line.join(" & "));
                out.push_str(if k + 1 < n { " \\\\\n" } else { "\n" });
            }
            out.push_str("\\end{ytableau}\n");
            out
        }
    }
}

/// Several titled renderings side by side, bottom-aligned so that French
/// drawings share their first row, separated by `gap` spaces.
pub fn side_by_side(blocks: &[(&str, String)], gap: usize) -> String {
    let split: Vec<Vec<&str>> = blocks.iter().map(|(_, b)| b.lines().collect()).collect();
    let widths: Vec<usize> = blocks
        .iter()
        .zip(&split)
        .map(|((title, _), ls)| {
            ls.iter()
                .map(|l| l.chars().count())
                .chain(std::iter::once(title.chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let height = split.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let mut line = String::new();
    for ((title, _), &w) in blocks.iter().zip(&widths) {
        let _ = write!(line, "{title:<w$}{:gap$}", "");
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for k in 0..height {
        let mut line = String::new();
        for (block, &w) in split.iter().zip(&widths) {
            let offset = height - block.len();
            let text = if k >= offset { block[k - offset] } else { "" };
            let _ = write!(line, "{text:<w$}{:gap$}", "");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn opt_label(v: Option<Label>) -> String {
    v.map_or_else(|| "_".to_string(), |v| v.to_string())
}

/// Line-oriented `key=value` records for an intersection report.
pub fn intersection_records(report: &IntersectionReport) -> Vec<(String, String)> {
    let mut out = vec![("variant".to_string(), report.variant().to_string())];
    match report {
        IntersectionReport::Disjoint => {}
        IntersectionReport::SharedEmptyBox { s_box, a, i } => {
            out.push(("s_box".into(), format!("{},{}", s_box.row, s_box.col)));
            out.push(("a".into(), a.to_string()));
            out.push(("i".into(), i.to_string()));
        }
        IntersectionReport::Strong(st) => {
            out.push(("s_box".into(), format!("{},{}", st.s_box.row, st.s_box.col)));
            out.push(("s".into(), st.s.to_string()));
            out.push(("a".into(), st.a.to_string()));
            out.push(("b".into(), opt_label(st.b)));
            out.push(("i".into(), st.i.to_string()));
            out.push(("j".into(), opt_label(st.j)));
            out.push(("adjacency".into(), st.adjacency.to_string()));
            out.push(("configuration".into(), st.configuration.to_string()));
        }
    }
    out
}

/// `key=value` dump of a commutation report, stable for diffing.
pub fn commutation_records(report: &CommutationReport) -> String {
    let mut out = String::new();
    let mut push = |k: &str, v: String| {
        let _ = writeln!(out, "{k}={v}");
    };
    push("left", inline(&report.left));
    push("right", inline(&report.right));
    push("fused", inline(&report.fused));
    for (k, v) in intersection_records(&report.intersection) {
        push(&k, v);
    }
    push("all_equal", report.all_equal.to_string());
    out
}
