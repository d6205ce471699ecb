// Feeding the recorded pointer sequence of a golden script through the
// message boundary must land the engine in exactly the state the headless
// replay reaches: the UI adds no geometry of its own.

import { execFile } from "node:child_process"
import { mkdtempSync, readFileSync, rmSync } from "node:fs"
import { tmpdir } from "node:os"
import { join } from "node:path"
import { promisify } from "node:util"

import { afterAll, describe, expect, it } from "vitest"

import { EngineClient } from "../src/engineClient"
import { pointerMessagesFrom, repoRoot } from "./util"

const run = promisify(execFile)
const SCENES = ["basic", "rings", "plot", "round", "editors"]
const tmp = mkdtempSync(join(tmpdir(), "movekit-parity-"))

afterAll(() => rmSync(tmp, { recursive: true, force: true }))

async function replaySnapshot(name: string): Promise<string> {
  const out = join(tmp, name)
  await run(
    "python3",
    [
      "-m",
      "movekit.cli",
      "replay",
      "--scene",
      join(repoRoot, "tests", "data", `scene_${name}.scene`),
      "--script",
      join(repoRoot, "tests", "data", `script_${name}.events`),
      "--out",
      out,
    ],
    { cwd: repoRoot, env: { ...process.env, PYTHONPATH: join(repoRoot, "src") } },
  )
  return readFileSync(join(out, "final.scene"), "utf8")
}

describe("pointer parity with the headless replay", () => {
  it.each(SCENES)(
    "scene %s reaches the identical snapshot",
    async (name) => {
      const expected = await replaySnapshot(name)
      const client = new EngineClient({
        scenePath: join(repoRoot, "tests", "data", `scene_${name}.scene`),
        repoRoot,
      })
      try {
        await client.started
        const script = readFileSync(
          join(repoRoot, "tests", "data", `script_${name}.events`),
          "utf8",
        )
        for (const msg of pointerMessagesFrom(script)) {
          const reply = await client.send(msg)
          expect(reply).toHaveProperty("draw_list")
        }
        const snap = await client.send({ op: "snapshot" })
        if (!("scene" in snap)) throw new Error("no scene in snapshot reply")
        expect(snap.scene).toBe(expected)
      } finally {
        await client.close()
      }
    },
    30000,
  )
})
