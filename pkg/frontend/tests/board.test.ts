import { describe, expect, it } from "vitest";

import type {
  AssistApi,
  CreateResponse,
  DictionaryInfo,
  FeasibleListResponse,
  FeedbackResponse,
  SuggestionResponse,
} from "../src/api.js";
import { ServiceError } from "../src/api.js";
import { BoardController } from "../src/board.js";

/** Canned service double for one scripted session over the demo dictionary.
 * It holds the responses the real service would give; the client under test
 * must never compute feasibility itself.
 */
class FakeApi implements AssistApi {
  count = 5;
  lastGuess = "";
  calls: string[] = [];

  async listDictionaries(): Promise<DictionaryInfo[]> {
    this.calls.push("listDictionaries");
    return [{ name: "candidates", k: 5, size: 5 }];
  }

  async createSession(dictionary: string): Promise<CreateResponse> {
    this.calls.push(`create ${dictionary}`);
    this.count = 5;
    return { session: "s1", k: 5, size: 5 };
  }

  async postFeedback(_s: string, guess: string, marking: string): Promise<FeedbackResponse> {
    this.calls.push(`feedback ${guess} ${marking}`);
    if (marking === "22222") {
      this.count = 1;
      this.lastGuess = guess;
      return { feasible: 1 };
    }
    if (guess === "ALGAE" && marking === "20001") {
      this.count = 2;
      return { feasible: 2 };
    }
    throw new ServiceError(409, "inconsistent_feedback", "no dictionary word matches");
  }

  async getSuggestion(): Promise<SuggestionResponse> {
    this.calls.push("suggestion");
    return {
      word: this.count === 1 ? this.lastGuess : "ABBEY",
      mode: "exact",
      feasible: this.count,
    };
  }

  async listFeasible(): Promise<FeasibleListResponse> {
    this.calls.push("list");
    if (this.count === 2) return { total: 2, words: ["ABBEY", "ANNEX"] };
    if (this.count === 1) return { total: 1, words: [this.lastGuess] };
    return { total: 5, words: ["ABBEY", "ANNEX", "AMAZE", "GAMES", "KEEPS"] };
  }

  async undoLast(): Promise<FeedbackResponse> {
    this.calls.push("undo");
    this.count = 5;
    return { feasible: 5 };
  }
}

function enterWord(board: BoardController, word: string): void {
  for (const ch of word) board.typeLetter(ch);
}

async function startSession(api: AssistApi = new FakeApi()): Promise<BoardController> {
  const board = new BoardController(api);
  await board.loadDictionaries();
  await board.start("candidates");
  return board;
}

describe("scripted session", () => {
  it("worked example narrows to two candidates", async () => {
    const board = await startSession();
    expect(board.getState().k).toBe(5);
    expect(board.getState().feasible).toBe(5);

    enterWord(board, "ALGAE");
    expect(board.getState().draftColors).toEqual(["gray", "gray", "gray", "gray", "gray"]);
    board.tapCell(0); // gray -> yellow
    board.tapCell(0); // yellow -> green
    board.tapCell(4); // gray -> yellow
    expect(board.canSubmit()).toBe(true);

    const ok = await board.submitRow();
    expect(ok).toBe(true);
    const state = board.getState();
    expect(state.feasible).toBe(2);
    expect(state.rows).toHaveLength(1);
    expect(state.draftLetters).toHaveLength(0);
    expect(state.banner).toBeNull();
  });

  it("all-green row leaves one candidate and suggests the entered word", async () => {
    const board = await startSession();
    enterWord(board, "ALGAE");
    board.tapCell(0);
    board.tapCell(0);
    board.tapCell(4);
    await board.submitRow();

    enterWord(board, "ABBEY");
    for (let col = 0; col < 5; col += 1) {
      board.tapCell(col);
      board.tapCell(col); // gray -> yellow -> green
    }
    await board.submitRow();

    const state = board.getState();
    expect(state.feasible).toBe(1);
    expect(state.suggestion).toEqual({ word: "ABBEY", mode: "exact" });
    expect(state.rows).toHaveLength(2);
  });

  it("contradictory colors raise a banner and highlight the row, state unchanged", async () => {
    const board = await startSession();
    enterWord(board, "ALGAE");
    board.tapCell(0);
    board.tapCell(0);
    board.tapCell(4);
    await board.submitRow();

    enterWord(board, "ALGAE"); // all gray contradicts the previous row
    const ok = await board.submitRow();
    expect(ok).toBe(false);
    const state = board.getState();
    expect(state.banner).toMatch(/no dictionary word matches/);
    expect(state.errorRow).toBe(1); // the draft row, right after the one committed row
    expect(state.rows).toHaveLength(1);
    expect(state.feasible).toBe(2); // count still mirrors the last accepted response
    expect(state.draftLetters.join("")).toBe("ALGAE"); // kept for fixing the colors

    board.dismissBanner();
    expect(board.getState().banner).toBeNull();
    expect(board.getState().errorRow).toBeNull();
  });

  it("undo removes the last row and restores the count", async () => {
    const board = await startSession();
    enterWord(board, "ALGAE");
    board.tapCell(0);
    board.tapCell(0);
    board.tapCell(4);
    await board.submitRow();
    expect(board.getState().feasible).toBe(2);

    const ok = await board.undo();
    expect(ok).toBe(true);
    expect(board.getState().rows).toHaveLength(0);
    expect(board.getState().feasible).toBe(5);
  });

  it("refreshes the open word panel after each accepted row", async () => {
    const board = await startSession();
    await board.showFeasible();
    expect(board.getState().feasibleTotal).toBe(5);

    enterWord(board, "ALGAE");
    board.tapCell(0);
    board.tapCell(0);
    board.tapCell(4);
    await board.submitRow();
    expect(board.getState().feasibleWords).toEqual(["ABBEY", "ANNEX"]);
    expect(board.getState().feasibleTotal).toBe(2);
  });

  it("rejects a second mutation while one is in flight", async () => {
    const api = new FakeApi();
    let release: (() => void) | null = null;
    const slowFeedback = new Promise<void>((resolve) => {
      release = resolve;
    });
    const original = api.postFeedback.bind(api);
    api.postFeedback = async (s, g, m) => {
      await slowFeedback;
      return original(s, g, m);
    };

    const board = await startSession(api);
    enterWord(board, "ALGAE");
    board.tapCell(0);
    board.tapCell(0);
    board.tapCell(4);

    const first = board.submitRow();
    expect(board.getState().pending).toBe(true);
    const second = await board.submitRow(); // immediate: guarded
    expect(second).toBe(false);
    const undone = await board.undo(); // also guarded while pending
    expect(undone).toBe(false);

    (release as unknown as () => void)();
    expect(await first).toBe(true);
    expect(board.getState().pending).toBe(false);
    expect(board.getState().feasible).toBe(2);
  });

  it("ignores taps on filled rows and never over-types the draft", async () => {
    const board = await startSession();
    enterWord(board, "ALGAEXYZ"); // extra letters dropped
    expect(board.getState().draftLetters.join("")).toBe("ALGAE");
    board.tapCell(7); // out of range: no-op
    expect(board.getState().draftColors).toHaveLength(5);
    board.backspace();
    expect(board.getState().draftLetters.join("")).toBe("ALGA");
    expect(board.canSubmit()).toBe(false);
  });
});
