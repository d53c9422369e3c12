import { HttpApi } from "./api.js";
import type { BoardState } from "./board.js";
import { BoardController } from "./board.js";

const api = new HttpApi(window.location.origin.startsWith("http") ? "" : "http://127.0.0.1:8717");
const board = new BoardController(api);

const $ = (id: string): HTMLElement => {
  const el = document.getElementById(id);
  if (el === null) throw new Error(`missing element #${id}`);
  return el;
};

function render(state: Readonly<BoardState>): void {
  const picker = $("dictionary") as HTMLSelectElement;
  if (picker.options.length !== state.dictionaries.length) {
    picker.innerHTML = "";
    for (const d of state.dictionaries) {
      const opt = document.createElement("option");
      opt.value = d.name;
      opt.textContent = `${d.name} (${d.size} words of ${d.k})`;
      picker.appendChild(opt);
    }
  }

  const banner = $("banner");
  banner.textContent = state.banner ?? "";
  banner.style.display = state.banner === null ? "none" : "block";

  const grid = $("board");
  grid.innerHTML = "";
  const allRows = [...state.rows.map((r) => ({ ...r, draft: false }))];
  if (state.sessionId !== null) {
    allRows.push({ letters: state.draftLetters, colors: state.draftColors, draft: true });
  }
  allRows.forEach((row, rowIndex) => {
    const div = document.createElement("div");
    div.className = "row" + (state.errorRow === rowIndex ? " error" : "");
    for (let col = 0; col < state.k; col += 1) {
      const cell = document.createElement("span");
      const letter = row.letters[col];
      cell.className = "cell " + (letter === undefined ? "empty" : row.colors[col] ?? "gray");
      cell.textContent = letter ?? "";
      if (row.draft && letter !== undefined) {
        cell.addEventListener("click", () => board.tapCell(col));
      }
      div.appendChild(cell);
    }
    grid.appendChild(div);
  });

  $("feasible-count").textContent =
    state.feasible === null ? "" : `${state.feasible} candidate${state.feasible === 1 ? "" : "s"}`;
  $("suggestion").textContent =
    state.suggestion === null ? "" : `try ${state.suggestion.word} (${state.suggestion.mode})`;

  const panel = $("feasible-panel");
  if (state.feasibleWords === null) {
    panel.style.display = "none";
  } else {
    panel.style.display = "block";
    const shown = state.feasibleWords.length;
    const total = state.feasibleTotal ?? shown;
    $("feasible-words").textContent = state.feasibleWords.join("  ");
    $("feasible-more").textContent = total > shown ? `… and ${total - shown} more` : "";
  }

  ($("submit") as HTMLButtonElement).disabled = !board.canSubmit();
  ($("undo") as HTMLButtonElement).disabled =
    state.pending || state.sessionId === null || state.rows.length === 0;
  ($("start") as HTMLButtonElement).disabled = state.pending;
}

board.subscribe(render);

$("start").addEventListener("click", () => {
  const picker = $("dictionary") as HTMLSelectElement;
  if (picker.value !== "") void board.start(picker.value);
});
$("submit").addEventListener("click", () => void board.submitRow());
$("undo").addEventListener("click", () => void board.undo());
$("show-feasible").addEventListener("click", () => void board.showFeasible());
$("banner").addEventListener("click", () => board.dismissBanner());

document.addEventListener("keydown", (ev) => {
  if (ev.key === "Enter") {
    void board.submitRow();
  } else if (ev.key === "Backspace") {
    board.backspace();
  } else if (/^[a-zA-Z0-9]$/.test(ev.key)) {
    board.typeLetter(ev.key);
  }
});

void board.loadDictionaries();
