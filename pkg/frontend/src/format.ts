import type { Count } from "./types.js";

/** Insert thousands separators into a non-negative decimal string. */
export function withSeparators(digits: string): string {
  const negative = digits.startsWith("-");
  const body = negative ? digits.slice(1) : digits;
  const parts: string[] = [];
  for (let end = body.length; end > 0; end -= 3) {
    parts.unshift(body.slice(Math.max(0, end - 3), end));
  }
  return (negative ? "-" : "") + parts.join(",");
}

const SUFFIXES: [number, string][] = [
  [15, "P"],
  [12, "T"],
  [9, "B"],
  [6, "M"],
  [3, "K"],
];

/** Compact magnitude form: 1234 -> "1.2K", 3_300 -> "3.3K", 10^13 -> "10T".
 * Works on decimal strings of any length, so counts beyond 2^53 stay exact
 * enough for display. */
export function magnitude(value: Count): string {
  const digits = typeof value === "number" ? Math.trunc(value).toString() : value;
  if (digits.startsWith("-")) return "-" + magnitude(digits.slice(1));
  const len = digits.length;
  for (const [power, suffix] of SUFFIXES) {
    if (len > power) {
      const whole = digits.slice(0, len - power);
      const frac = digits[len - power];
      const rendered = whole.length >= 3 || frac === "0"
        ? whole
        : `${whole}.${frac}`;
      return rendered + suffix;
    }
  }
  return digits;
}

/** Full display form: exact separated digits, with the compact magnitude in
 * parentheses for large values. */
export function formatCount(value: Count): string {
  const digits = typeof value === "number" ? Math.trunc(value).toString() : value;
  const exact = withSeparators(digits);
  return digits.replace("-", "").length > 4 ? `${exact} (${magnitude(value)})` : exact;
}

/** Numeric view of a wire count; precise only below 2^53, display-only. */
export function approxNumber(value: Count): number {
  return typeof value === "number" ? value : Number(value);
}
