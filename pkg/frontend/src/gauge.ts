import type { ConsistencyView } from "./types.js";

// Review threshold for the mu needle. A convention for when a human
// should take another look, not a mathematical boundary; adjustable
// per instance.
export const DEFAULT_REVIEW_MU = 0.1;

export interface GaugeState {
  consistency: ConsistencyView | null;
  mu: number | null;
}

/** Raw sigma^2 / mu / distance readouts with a review marker on mu. */
export class ConsistencyGauge {
  reviewMu = DEFAULT_REVIEW_MU;

  constructor(private readonly root: HTMLElement) {}

  render(state: GaugeState): void {
    const { consistency, mu } = state;
    if (!consistency) {
      this.root.innerHTML = `<span class="gauge-pending">consistency: waiting for a complete matrix</span>`;
      return;
    }
    const sigma = consistency.sigma2 === null ? "n/a" : display(consistency.sigma2);
    const muText = mu === null ? "n/a" : display(mu);
    const review = mu !== null && mu > this.reviewMu;
    // The needle position is display-only; capped at 2x the marker.
    const fraction =
      mu === null ? 0 : Math.max(0, Math.min(1, mu / (2 * this.reviewMu)));
    this.root.innerHTML = `
      <div class="gauge ${review ? "gauge-review" : "gauge-ok"}">
        <div class="gauge-needle-track"><span class="gauge-needle" style="left: ${(
          fraction * 100
        ).toFixed(1)}%"></span><span class="gauge-marker"></span></div>
        <dl class="gauge-readout">
          <dt>mu</dt><dd data-field="mu">${muText}</dd>
          <dt>sigma&sup2;</dt><dd data-field="sigma2">${sigma}</dd>
          <dt>distance</dt><dd data-field="distance">${display(consistency.distance)}</dd>
        </dl>
        ${review ? `<span class="gauge-flag">above the review marker (${this.reviewMu}, a convention)</span>` : ""}
      </div>`;
  }
}

function display(value: number): string {
  if (value === 0) {
    return "0";
  }
  if (value >= 0.001) {
    return value.toFixed(4).replace(/0+$/, "").replace(/\.$/, "");
  }
  return value.toExponential(2);
}
