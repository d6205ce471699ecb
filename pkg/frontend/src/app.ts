// Browser wiring: canvas events in, frames out.  All geometry lives on
// the engine side of the transport; this file only forwards pointers,
// paints what comes back, and shows menu chrome.

import { MENU_ENTRIES, menuMessage } from "./menu.js"
import {
  Button,
  FrameDelta,
  MenuRequest,
  PointerKind,
  Transport,
  cssCursor,
} from "./protocol.js"
import { paintOverlay, parseCovers } from "./covers.js"
import { paint, renderFrame } from "./renderer.js"

export interface App {
  applyFrame(delta: FrameDelta): Promise<void>
  toggleCovers(): Promise<void>
  saveLayout(): Promise<string>
  loadLayout(text: string): Promise<void>
}

function isFrame(reply: unknown): reply is FrameDelta {
  return typeof reply === "object" && reply !== null && "draw_list" in reply
}

export function wireApp(canvas: HTMLCanvasElement, transport: Transport): App {
  const ctx = canvas.getContext("2d")
  if (ctx === null) throw new Error("canvas has no 2d context")
  let showCovers = false
  let savedRecord: string | undefined
  let menuDiv: HTMLDivElement | null = null

  async function repaintOverlay() {
    if (!showCovers) return
    const reply = await transport.send({ op: "covers" })
    if ("covers" in reply) paintOverlay(ctx!, parseCovers(reply.covers))
  }

  async function applyFrame(delta: FrameDelta) {
    ctx!.clearRect(0, 0, canvas.width, canvas.height)
    paint(ctx!, renderFrame(delta))
    canvas.style.cursor = cssCursor(delta.cursor_hint)
    await repaintOverlay()
    if (delta.menu_request !== null) openMenu(delta.menu_request)
  }

  function closeMenu() {
    menuDiv?.remove()
    menuDiv = null
  }

  function openMenu(request: MenuRequest) {
    closeMenu()
    const div = document.createElement("div")
    div.className = "movekit-menu"
    div.style.position = "absolute"
    div.style.left = `${canvas.offsetLeft + request.point[0]}px`
    div.style.top = `${canvas.offsetTop + request.point[1]}px`
    const title = document.createElement("div")
    title.textContent =
      request.reason === "tune" ? `tune ${request.tag}` : request.tag
    div.appendChild(title)
    if (request.reason === "menu") {
      for (const entry of MENU_ENTRIES) {
        if (entry.command === "restore-at" && savedRecord === undefined) continue
        const b = document.createElement("button")
        b.textContent = entry.label
        b.addEventListener("click", async () => {
          closeMenu()
          const reply = await transport.send(
            menuMessage(request, entry.command, savedRecord),
          )
          if ("record" in reply && typeof reply.record === "string")
            savedRecord = reply.record
          if (isFrame(reply)) await applyFrame(reply)
        })
        div.appendChild(b)
      }
    }
    document.body.appendChild(div)
    menuDiv = div
  }

  async function forward(kind: PointerKind, e: MouseEvent) {
    const rect = canvas.getBoundingClientRect()
    const msg = {
      op: "pointer" as const,
      kind,
      x: e.clientX - rect.left,
      y: e.clientY - rect.top,
      button: (e.button === 2 ? "R" : "L") as Button,
    }
    const reply = await transport.send(msg)
    if (isFrame(reply)) await applyFrame(reply)
  }

  canvas.addEventListener("mousedown", (e) => {
    closeMenu()
    void forward("down", e)
  })
  canvas.addEventListener("mousemove", (e) => void forward("move", e))
  canvas.addEventListener("mouseup", (e) => void forward("up", e))
  canvas.addEventListener("dblclick", (e) => void forward("dblclick", e))
  canvas.addEventListener("contextmenu", (e) => e.preventDefault())

  const app: App = {
    applyFrame,
    async toggleCovers() {
      showCovers = !showCovers
      const reply = await transport.send({ op: "frame" })
      if (isFrame(reply)) await applyFrame(reply)
    },
    async saveLayout() {
      const reply = await transport.send({ op: "snapshot" })
      if ("scene" in reply) return reply.scene
      throw new Error("engine returned no scene")
    },
    async loadLayout(text: string) {
      const reply = await transport.send({ op: "load", scene: text })
      if (isFrame(reply)) await applyFrame(reply)
    },
  }
  return app
}

// layout save/load through the browser's file machinery

export function downloadLayout(app: App, name = "layout.scene") {
  void app.saveLayout().then((text) => {
    const a = document.createElement("a")
    a.href = URL.createObjectURL(new Blob([text], { type: "text/plain" }))
    a.download = name
    a.click()
    URL.revokeObjectURL(a.href)
  })
}

export function pickLayout(app: App) {
  const input = document.createElement("input")
  input.type = "file"
  input.accept = ".scene"
  input.addEventListener("change", async () => {
    const file = input.files?.[0]
    if (file) await app.loadLayout(await file.text())
  })
  input.click()
}
