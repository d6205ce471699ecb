// Line-oriented client for the engine bridge: one JSON request per line,
// one JSON reply per line, strictly in order.  The node flavour spawns the
// bridge as a subprocess; a browser would hand wireApp a Transport that
// tunnels the same lines over a socket.

import { spawn, ChildProcessWithoutNullStreams } from "node:child_process"
import { EngineReply, EngineRequest, FrameDelta, Transport } from "./protocol.js"

export class EngineClient implements Transport {
  private proc: ChildProcessWithoutNullStreams
  private buffer = ""
  private waiters: ((line: string) => void)[] = []
  private lines: string[] = []
  readonly started: Promise<FrameDelta>

  constructor(args: { scenePath?: string; repoRoot: string }) {
    const argv = ["-m", "movekit.cli", "bridge"]
    if (args.scenePath !== undefined) argv.push("--scene", args.scenePath)
    this.proc = spawn("python3", argv, {
      cwd: args.repoRoot,
      env: { ...process.env, PYTHONPATH: `${args.repoRoot}/src` },
    })
    this.proc.stdout.setEncoding("utf8")
    this.proc.stdout.on("data", (chunk: string) => this.feed(chunk))
    // the bridge paints once before reading anything
    this.started = this.nextLine().then((line) => JSON.parse(line))
  }

  private feed(chunk: string) {
    this.buffer += chunk
    for (;;) {
      const nl = this.buffer.indexOf("\n")
      if (nl < 0) return
      const line = this.buffer.slice(0, nl)
      this.buffer = this.buffer.slice(nl + 1)
      const waiter = this.waiters.shift()
      if (waiter) waiter(line)
      else this.lines.push(line)
    }
  }

  private nextLine(): Promise<string> {
    const queued = this.lines.shift()
    if (queued !== undefined) return Promise.resolve(queued)
    return new Promise((resolve) => this.waiters.push(resolve))
  }

  async send(msg: EngineRequest): Promise<EngineReply> {
    const reply = this.nextLine()
    this.proc.stdin.write(JSON.stringify(msg) + "\n")
    return JSON.parse(await reply)
  }

  async close(): Promise<void> {
    const done = new Promise<void>((resolve) => this.proc.once("exit", () => resolve()))
    this.proc.stdin.write(JSON.stringify({ op: "quit" }) + "\n")
    this.proc.stdin.end()
    await done
  }
}
