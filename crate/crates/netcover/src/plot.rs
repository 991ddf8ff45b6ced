//! SVG chart of mean recruits against graph size, one line per policy with
//! ±1 sd error bars.

use std::collections::BTreeMap;
use std::path::Path;

use plotters::prelude::*;

use crate::experiment::SummaryRow;

const WIDTH: u32 = 720;
const HEIGHT: u32 = 480;

fn color(i: usize) -> RGBColor {
    const PALETTE: [RGBColor; 8] = [
        RGBColor(0x1f, 0x77, 0xb4),
        RGBColor(0xff, 0x7f, 0x0e),
        RGBColor(0x2c, 0xa0, 0x2c),
        RGBColor(0xd6, 0x27, 0x28),
        RGBColor(0x94, 0x67, 0xbd),
        RGBColor(0x8c, 0x56, 0x4b),
        RGBColor(0xe3, 0x77, 0xc2),
        RGBColor(0x7f, 0x7f, 0x7f),
    ];
    PALETTE[i % PALETTE.len()]
}

/// Series keyed by algorithm, in first-appearance order, points sorted by n.
fn series(rows: &[SummaryRow]) -> Vec<(&str, Vec<&SummaryRow>)> {
    let mut order: Vec<&str> = Vec::new();
    let mut by_algo: BTreeMap<&str, Vec<&SummaryRow>> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.mean_recruits.is_finite()) {
        if !by_algo.contains_key(r.algorithm.as_str()) {
            order.push(&r.algorithm);
        }
        by_algo.entry(&r.algorithm).or_default().push(r);
    }
    order
        .into_iter()
        .map(|a| {
            let mut pts = by_algo.remove(a).unwrap_or_default();
            pts.sort_by_key(|r| r.n);
            (a, pts)
        })
        .collect()
}

/// Renders the chart as an SVG document.
pub fn render_svg(rows: &[SummaryRow], title: &str) -> Result<String, String> {
    let lines = series(rows);
    let pts = lines.iter().flat_map(|(_, p)| p.iter());
    let (mut x_max, mut y_max) = (0f64, 0f64);
    for r in pts {
        x_max = x_max.max(r.n as f64);
        let sd = if r.sd_recruits.is_finite() { r.sd_recruits } else { 0.0 };
        y_max = y_max.max(r.mean_recruits + sd);
    }
    let x_max = if x_max > 0.0 { x_max * 1.08 } else { 10.0 };
    let y_max = if y_max > 0.0 { y_max * 1.1 } else { 10.0 };

    let mut svg = String::new();
    {
        let root = SVGBackend::with_string(&mut svg, (WIDTH, HEIGHT)).into_drawing_area();
        let e = |err: DrawingAreaErrorKind<_>| err.to_string();
        root.fill(&WHITE).map_err(e)?;
        let mut chart = ChartBuilder::on(&root)
            .caption(title, ("sans-serif", 20))
            .margin(12)
            .x_label_area_size(40)
            .y_label_area_size(56)
            .build_cartesian_2d(0f64..x_max, 0f64..y_max)
            .map_err(e)?;
        chart
            .configure_mesh()
            .x_desc("number of nodes")
            .y_desc("recruited nodes needed")
            .draw()
            .map_err(e)?;

        for (i, (name, points)) in lines.iter().enumerate() {
            let c = color(i);
            chart
                .draw_series(LineSeries::new(
                    points.iter().map(|r| (r.n as f64, r.mean_recruits)),
                    c.stroke_width(2),
                ))
                .map_err(e)?
                .label(*name)
                .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 20, y)], c.stroke_width(2)));
            chart
                .draw_series(points.iter().map(|r| {
                    let sd = if r.sd_recruits.is_finite() { r.sd_recruits } else { 0.0 };
                    ErrorBar::new_vertical(
                        r.n as f64,
                        r.mean_recruits - sd,
                        r.mean_recruits,
                        r.mean_recruits + sd,
                        c.filled(),
                        8,
                    )
                }))
                .map_err(e)?;
        }
        if !lines.is_empty() {
            chart
                .configure_series_labels()
                .position(SeriesLabelPosition::UpperLeft)
                .background_style(WHITE.mix(0.85))
                .border_style(BLACK)
                .draw()
                .map_err(e)?;
        }
        root.present().map_err(e)?;
    }
    Ok(svg)
}

pub fn emit_plot(rows: &[SummaryRow], path: &Path, title: &str) -> anyhow::Result<()> {
    let svg = render_svg(rows, title).map_err(anyhow::Error::msg)?;
    std::fs::write(path, svg)?;
    Ok(())
}
