// The classical comparison scale: whole strengths 1..9 and their
// reciprocals. The grid offers these as snap points; free positive
// entry hides behind the "advanced" toggle since the math accepts any
// positive ratio.

export const SCALE_VALUES: number[] = (() => {
  const values: number[] = [];
  for (let k = 9; k >= 2; k--) {
    values.push(1 / k);
  }
  values.push(1);
  for (let k = 2; k <= 9; k++) {
    values.push(k);
  }
  return values;
})();

export function scaleLabel(value: number): string {
  for (let k = 2; k <= 9; k++) {
    if (Math.abs(value - 1 / k) < 1e-12) {
      return `1/${k}`;
    }
  }
  if (Math.abs(value - Math.round(value)) < 1e-12) {
    return String(Math.round(value));
  }
  return trimmed(value, 4);
}

/** Parse user input: decimals or fractions like "3/7". */
export function parseRatio(text: string): number {
  const token = text.trim();
  if (!token) {
    return NaN;
  }
  const parts = token.split("/");
  if (parts.length === 2) {
    const p = Number(parts[0]);
    const q = Number(parts[1]);
    return q === 0 ? NaN : p / q;
  }
  if (parts.length > 2) {
    return NaN;
  }
  return Number(token);
}

export function trimmed(value: number, digits = 4): string {
  const text = value.toFixed(digits);
  return text.replace(/\.?0+$/, "") || "0";
}

/** Nearest snap point, for highlighting the select when values match. */
export function nearestScaleValue(value: number): number {
  let best = SCALE_VALUES[0];
  for (const candidate of SCALE_VALUES) {
    if (Math.abs(candidate - value) < Math.abs(best - value)) {
      best = candidate;
    }
  }
  return best;
}
