/** Cell colors and their wire digits: gray 0, yellow 1, green 2. */

export type CellColor = "gray" | "yellow" | "green";

const TO_DIGIT: Record<CellColor, string> = { gray: "0", yellow: "1", green: "2" };
const FROM_DIGIT: Record<string, CellColor> = { "0": "gray", "1": "yellow", "2": "green" };
const CYCLE: Record<CellColor, CellColor> = { gray: "yellow", yellow: "green", green: "gray" };

export function colorsToDigits(colors: readonly CellColor[]): string {
  return colors.map((c) => TO_DIGIT[c]).join("");
}

export function digitsToColors(digits: string): CellColor[] {
  return Array.from(digits, (d) => {
    const color = FROM_DIGIT[d];
    if (color === undefined) {
      throw new Error(`marking digit must be 0, 1 or 2, got '${d}'`);
    }
    return color;
  });
}

export function cycleColor(c: CellColor): CellColor {
  return CYCLE[c];
}
