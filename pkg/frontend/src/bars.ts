// Horizontal bar chart, plain DOM. Values always come straight from an
// API payload; this file only draws.

export interface Bar {
  label: string;
  value: number;
  highlight?: boolean;
}

export function renderBars(container: HTMLElement, bars: Bar[], title?: string): void {
  container.textContent = "";
  if (title) {
    const heading = document.createElement("div");
    heading.className = "bars-title";
    heading.textContent = title;
    container.appendChild(heading);
  }
  const max = Math.max(...bars.map((b) => b.value), 1e-12);
  for (const bar of bars) {
    const row = document.createElement("div");
    row.className = "bar-row" + (bar.highlight ? " bar-highlight" : "");

    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = bar.label;

    const track = document.createElement("span");
    track.className = "bar-track";
    const fill = document.createElement("span");
    fill.className = "bar-fill";
    fill.style.width = `${(100 * bar.value) / max}%`;
    track.appendChild(fill);

    const value = document.createElement("span");
    value.className = "bar-value";
    value.textContent = bar.value.toFixed(4);
    value.dataset.value = String(bar.value);

    row.append(label, track, value);
    container.appendChild(row);
  }
}
