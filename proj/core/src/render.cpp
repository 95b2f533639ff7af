// placeholder, filled in by the renderer
